#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ght/weight.hpp"

namespace ght {

using NodeId = int;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  std::int64_t mult = 1;
  std::int64_t eps = 0;

  Weight weight() const { return Weight(mult, eps); }
  NodeId Other(NodeId x) const { return x == u ? v : u; }
};

struct Incidence {
  NodeId to;
  int edge;
};

// Undirected multigraph with integer multiplicities and optional
// perturbation units. Immutable after construction.
//
// Every node carries the set of root-graph nodes it stands for. Plain
// nodes stand for themselves; contracted nodes of an auxiliary graph
// stand for a whole tree component.
class Graph {
 public:
  Graph() = default;

  // Parallel edges are merged into one edge with summed multiplicity and
  // summed perturbation. Edges with u == v are rejected.
  Graph(int n, std::vector<Edge> edges);

  // Same as above but with explicit node contents and self-loop counts.
  Graph(std::vector<std::vector<NodeId>> contents, std::vector<bool> contracted,
        std::vector<Edge> edges, std::vector<std::int64_t> self_loops = {});

  int num_nodes() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  std::span<const Incidence> Neighbors(NodeId v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }

  // Weighted degree, self-loops included.
  const Weight& Degree(NodeId v) const { return degree_[v]; }
  std::int64_t SelfLoops(NodeId v) const { return self_loops_.empty() ? 0 : self_loops_[v]; }

  // Sum of multiplicities over all stored edges.
  std::int64_t TotalMultiplicity() const { return total_mult_; }

  const std::vector<NodeId>& Contents(NodeId v) const { return contents_[v]; }
  bool IsContracted(NodeId v) const { return contracted_[v]; }
  // Number of root-graph nodes represented by v.
  int SizeG(NodeId v) const { return static_cast<int>(contents_[v].size()); }

  // True iff every multiplicity is 1, no perturbation, and no self-loops.
  bool IsSimple() const { return simple_; }
  bool IsPerturbed() const { return perturbed_; }
  bool IsConnected() const;

  // Same topology with a new perturbation per edge (indexed like edges()).
  Graph WithEps(const std::vector<std::int64_t>& eps) const;

 private:
  void Build(std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offset_{0};
  std::vector<Incidence> adj_;
  std::vector<Weight> degree_;
  std::vector<std::int64_t> self_loops_;
  std::vector<std::vector<NodeId>> contents_;
  std::vector<bool> contracted_;
  std::int64_t total_mult_ = 0;
  bool simple_ = true;
  bool perturbed_ = false;
};

// Sum of weights of edges with exactly one endpoint in `side`.
Weight CutValue(const Graph& g, const std::vector<char>& side);

// Connected component id per node, numbered from 0 in order of lowest node.
std::vector<int> ComponentLabels(const Graph& g);

struct Subdivision {
  Graph graph;
  // midpoint[i] is the node inserted for the i-th edge instance; instances
  // are listed edge by edge, `mult` copies each.
  std::vector<NodeId> midpoint;
  std::vector<std::pair<NodeId, NodeId>> instance_ends;
};

// Replaces every edge instance (u,v) by a path u - l_uv - v.
Subdivision Subdivide(const Graph& g);

struct InducedGraph {
  Graph graph;
  std::vector<NodeId> to_parent;  // local node -> node of the source graph
};

// G{S}: the subgraph induced by `s` plus one self-loop per boundary edge at
// its endpoint inside `s`. Degrees are preserved.
InducedGraph InducedWithSelfLoops(const Graph& g, const std::vector<NodeId>& s);

}  // namespace ght
