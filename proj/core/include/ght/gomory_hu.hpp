#pragma once

#include <functional>
#include <map>
#include <vector>

#include "ght/auxiliary_graph.hpp"
#include "ght/flow.hpp"
#include "ght/graph.hpp"
#include "ght/partition_tree.hpp"

namespace ght {

// Gomory-Hu by repeated refinement. Each step splits the largest
// super-node using its two smallest members.
PartitionTree ClassicGomoryHu(const Graph& g);

// Returns a minimum s,t-cut whose side contains s.
using CutOracle = std::function<CutSide(NodeId s, NodeId t)>;

// Gusfield's cut-tree construction over n nodes with cuts from `oracle`.
PartitionTree GusfieldWithOracle(int n, const CutOracle& oracle);
// All n-1 max-flow calls on the uncontracted graph.
PartitionTree Gusfield(const Graph& g);

// Partition tree separating exactly the pairs with connectivity <= k, with
// every edge a minimum cut of value <= k.
PartitionTree KPartialTree(const Graph& g, std::int64_t k);

// Stitches full trees of auxiliary graphs into a full tree of g. Each
// subtree is indexed by super-node of `partial` and spans the local nodes
// of BuildAuxiliaryGraph(g, partial, i). Super-nodes of size one may be
// omitted.
PartitionTree Assemble(const Graph& g, const PartitionTree& partial,
                       const std::map<int, PartitionTree>& subtrees);

// GH-equivalent partition tree realising the given non-crossing cuts, each
// a minimum cut between p and a terminal on the side not containing p.
PartitionTree NoncrossingTree(const Graph& g, NodeId p, const std::vector<CutSide>& cuts);

}  // namespace ght
