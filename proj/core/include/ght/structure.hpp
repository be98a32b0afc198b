#pragma once

#include <cstdint>
#include <vector>

#include "ght/graph.hpp"
#include "ght/partition_tree.hpp"

namespace ght {

struct Bag {
  std::vector<NodeId> nodes;
  int parent = -1;
  std::vector<int> children;
  Weight value;             // weight of the shared lightest edge; infinite for the root
  std::vector<NodeId> cut;  // nodes of the bag and every bag below it
};

// Nodes of a full tree grouped by the lightest edge on their path to p,
// ties going to the edge furthest from p. Bag 0 holds p alone.
struct CutMembershipTree {
  NodeId p = -1;
  std::vector<Bag> bags;
  std::vector<int> bag_of;  // -1 for nodes dropped by WLargeSubtree
};

CutMembershipTree BuildCutMembershipTree(const PartitionTree& t, NodeId p);

// Root plus the bags of value >= w.
CutMembershipTree WLargeSubtree(const CutMembershipTree& tm, std::int64_t w);

// At most one node of degree >= w inside the bag's cut.
bool IsEasyBag(const CutMembershipTree& tm, int bag, std::int64_t w,
               const std::vector<std::int64_t>& degrees);

struct StructureReport {
  std::int64_t w = 0;
  int bags = 0;
  int large_bags = 0;     // non-root bags of value >= w
  int non_easy = 0;
  int non_easy_leaves = 0;
  int smallest_non_easy_leaf = -1;  // min cut size over non-easy leaf bags
};

// Non-root bags of the w-large subtree that are not easy.
StructureReport AnalyzeStructure(const Graph& g, const PartitionTree& t, NodeId p, std::int64_t w);
int CountNonEasyBags(const Graph& g, const PartitionTree& t, NodeId p, std::int64_t w);

}  // namespace ght
