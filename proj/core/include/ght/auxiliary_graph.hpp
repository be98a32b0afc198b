#pragma once

#include <vector>

#include "ght/graph.hpp"
#include "ght/partition_tree.hpp"

namespace ght {

// G_i: the nodes of super-node i plus one contracted node per component
// of the tree with i removed. Local nodes [0, |V_i|) are the members of
// V_i in the order of t.Members(i); contracted nodes follow.
struct AuxiliaryGraph {
  Graph graph;
  int super = -1;
  int num_original = 0;
  std::vector<NodeId> local_to_root;      // root node, or -1 for contracted
  std::vector<int> contracted_neighbor;   // neighbour super-node, or -1
  std::vector<NodeId> root_to_local;      // size n of the root graph

  // Membership vector over root nodes for a side over local nodes.
  std::vector<char> ExpandSide(const std::vector<char>& local_side) const;
  // Number of members of V_i inside a local side.
  int OriginalCount(const std::vector<char>& local_side) const;
};

// `g` must be a plain graph (no contracted nodes) on t's node set. Its
// perturbation, if any, is summed into merged edges.
AuxiliaryGraph BuildAuxiliaryGraph(const Graph& g, const PartitionTree& t, int i);

// Gomory-Hu step: splits super-node i along a cut of G_i that separates
// local nodes s and t. Returns the id of the super-node on the cut's side.
int GhRefine(PartitionTree& tree, const AuxiliaryGraph& aux, const CutSide& cut, NodeId s,
             NodeId t);

}  // namespace ght
