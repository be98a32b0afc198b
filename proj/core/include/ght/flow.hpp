#pragma once

#include <cstdint>
#include <vector>

#include "ght/graph.hpp"
#include "ght/weight.hpp"

namespace ght {

// One side of a cut. `side` is a membership vector over the graph's nodes.
struct CutSide {
  std::vector<char> side;
  Weight value;
  NodeId s = -1;
  NodeId t = -1;

  bool Contains(NodeId v) const { return side[v] != 0; }
  int Size() const;
  std::vector<NodeId> Members() const;
};

// Residual network with Weight capacities, solved by blocking flows.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n = 0);
  static FlowNetwork FromGraph(const Graph& g);

  int num_nodes() const { return static_cast<int>(head_.size()); }
  int AddNode();
  // Arc u->v with capacity `cap` and reverse arc with capacity `rev_cap`.
  void AddArc(int u, int v, Weight cap, Weight rev_cap);
  void AddUndirected(int u, int v, Weight cap) { AddArc(u, v, cap, cap); }

  Weight MaxFlow(int s, int t);
  // Nodes reachable from s in the residual network.
  std::vector<char> ReachableFrom(int s) const;
  // Nodes that can reach t in the residual network.
  std::vector<char> CanReach(int t) const;

 private:
  bool Bfs(int s, int t);
  Weight Dfs(int u, int t, Weight limit);

  struct Arc {
    int to;
    int next;
    Weight cap;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> cur_;
};

// Minimum s,t-cut; the side contains s. On disconnected input the value is
// 0 and the side is s's component.
CutSide MaxFlowMinCut(const Graph& g, NodeId s, NodeId t);

// Latest minimum cut with respect to s: among all minimum s,t-cuts the one
// whose t-side is inclusion-minimal. The returned side is that t-side.
CutSide LatestMinCut(const Graph& g, NodeId s, NodeId t);

// lambda(u,v) for every pair by direct max-flow calls.
std::vector<std::vector<Weight>> AllPairsOracle(const Graph& g, int limit = 64);

// Monotone count of max-flow solves in this process.
std::uint64_t MaxFlowInvocations();
void CountMaxFlowInvocation();

}  // namespace ght
