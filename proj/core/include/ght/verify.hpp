#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ght/graph.hpp"
#include "ght/partition_tree.hpp"

namespace ght {

struct PairMismatch {
  NodeId u = -1;
  NodeId v = -1;
  Weight flow;        // max-flow value in the graph
  Weight tree_value;  // path minimum in the tree
  Weight side_value;  // value in the graph of the tree's bipartition
};

struct VerifyResult {
  bool ok = true;
  int pairs_checked = 0;
  std::vector<PairMismatch> mismatches;  // the first few offending pairs
};

// Every pair against a direct max-flow. Throws std::invalid_argument when
// n exceeds `oracle_limit`.
VerifyResult VerifyTreeFull(const Graph& g, const PartitionTree& t, int oracle_limit = 64);

// `pairs` distinct-endpoint pairs drawn uniformly with the given seed.
VerifyResult VerifyTreeSampled(const Graph& g, const PartitionTree& t, int pairs,
                               std::uint64_t seed);

}  // namespace ght
