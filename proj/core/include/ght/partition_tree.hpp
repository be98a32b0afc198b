#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "ght/flow.hpp"
#include "ght/graph.hpp"
#include "ght/weight.hpp"

namespace ght {

struct TreeEdge {
  int a;
  int b;
  Weight w;
};

// Tree over super-nodes, which partition the node set [0, n).
class PartitionTree {
 public:
  PartitionTree() = default;
  // A single super-node holding every node.
  explicit PartitionTree(int n);
  // Validates that `supers` partition [0, n) and `edges` form a tree.
  PartitionTree(int n, std::vector<std::vector<NodeId>> supers, std::vector<TreeEdge> edges);

  int num_nodes() const { return n_; }
  int num_super() const { return static_cast<int>(supers_.size()); }
  const std::vector<NodeId>& Members(int i) const;
  int SuperOf(NodeId v) const { return super_of_[v]; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  // Edge ids incident to super-node i.
  const std::vector<int>& Incident(int i) const { return incident_[i]; }
  int OtherEnd(int edge, int i) const { return edges_[edge].a == i ? edges_[edge].b : edges_[edge].a; }
  bool IsFull() const { return num_super() == n_; }

  // Splits super-node i. Nodes of V_i with side[v] set move to a new
  // super-node, which is returned; the rest stay in i. Every neighbouring
  // component of i must lie entirely inside or outside `side`; it is
  // reattached to the part on its side. `side` is indexed by node.
  int Refine(int i, const std::vector<char>& side, Weight value);

  // Nodes in the component of super-node `from` after deleting i, as a
  // node membership vector.
  std::vector<char> ComponentNodes(int i, int from) const;

  // Canonical form: edges listed by (min node, max node) for full trees.
  std::vector<TreeEdge> NodeEdges() const;

 private:
  int n_ = 0;
  std::vector<std::vector<NodeId>> supers_;
  std::vector<int> super_of_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<int>> incident_;
};

struct TreeQueryResult {
  Weight value;
  CutSide side;  // component of u after removing the chosen edge
  NodeId a = -1;
  NodeId b = -1;  // chosen tree edge
};

// Minimum edge on the u-v path of a full tree. Ties go to the edge
// deepest from u.
TreeQueryResult TreeQuery(const PartitionTree& t, NodeId u, NodeId v);

// Path minimum for every pair of a full tree, in O(n^2).
std::vector<std::vector<Weight>> AllPairsTreeValues(const PartitionTree& t);

// `t <n>` then `e <u> <v> <base>.<eps>` per edge, 1-indexed.
void WriteTree(std::ostream& out, const PartitionTree& t);
PartitionTree ReadTree(std::istream& in);
PartitionTree ReadTreeFile(const std::string& path);
void WriteTreeFile(const std::string& path, const PartitionTree& t);
std::string TreeToString(const PartitionTree& t);

// Full tree with every edge weight rounded to its base part.
PartitionTree RoundWeights(const PartitionTree& t);

}  // namespace ght
