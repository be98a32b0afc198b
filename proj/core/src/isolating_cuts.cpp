#include "ght/isolating_cuts.hpp"

#include <stdexcept>

namespace ght {

namespace {

// Minimal v-side of a minimum cut between v and everything outside
// `region`, computed on the graph with the outside contracted to a sink.
CutSide ExtractRegion(const Graph& g, NodeId v, const std::vector<NodeId>& region,
                      std::vector<int>& local) {
  const int k = static_cast<int>(region.size());
  for (int i = 0; i < k; ++i) local[region[i]] = i;
  FlowNetwork net(k + 1);
  const int sink = k;
  for (NodeId x : region) {
    for (const Incidence& inc : g.Neighbors(x)) {
      const int y = local[inc.to];
      if (y == -1) {
        net.AddArc(local[x], sink, g.edge(inc.edge).weight(), g.edge(inc.edge).weight());
      } else if (local[x] < y) {
        net.AddUndirected(local[x], y, g.edge(inc.edge).weight());
      }
    }
  }
  CutSide cut;
  cut.value = net.MaxFlow(sink, local[v]);
  std::vector<char> reach = net.CanReach(local[v]);
  cut.side.assign(g.num_nodes(), 0);
  for (int i = 0; i < k; ++i) {
    if (reach[i]) cut.side[region[i]] = 1;
  }
  for (NodeId x : region) local[x] = -1;
  return cut;
}

}  // namespace

std::map<NodeId, CutSide> IsolatingCuts(const Graph& g, NodeId p, const std::vector<NodeId>& c) {
  const int n = g.num_nodes();
  if (c.empty()) throw std::invalid_argument("empty terminal set");
  if (p < 0 || p >= n) throw std::invalid_argument("pivot out of range");
  std::vector<int> code(n, -1);
  for (size_t i = 0; i < c.size(); ++i) {
    NodeId v = c[i];
    if (v < 0 || v >= n) throw std::invalid_argument("terminal out of range");
    if (v == p) throw std::invalid_argument("pivot inside terminal set");
    if (code[v] != -1) throw std::invalid_argument("duplicate terminal");
    code[v] = static_cast<int>(i) + 1;
  }
  if (!g.IsConnected()) throw std::invalid_argument("graph is not connected");
  code[p] = 0;

  std::map<NodeId, CutSide> out;
  if (c.size() == 1) {
    out[c[0]] = LatestMinCut(g, p, c[0]);
    return out;
  }

  // Round b separates codes with bit b set from the rest; the source side
  // of its minimum cut is the bit-1 side. The region of code k collects the
  // nodes whose side pattern over all rounds spells k.
  int bits = 0;
  while ((std::size_t{1} << bits) < c.size() + 1) ++bits;
  std::vector<int> agree(n, 0);
  for (int b = 0; b < bits; ++b) {
    FlowNetwork net = FlowNetwork::FromGraph(g);
    const int src = net.AddNode();
    const int snk = net.AddNode();
    for (NodeId v = 0; v < n; ++v) {
      if (code[v] < 0) continue;
      if (code[v] >> b & 1) {
        net.AddArc(src, v, Weight::Infinite(), Weight());
      } else {
        net.AddArc(v, snk, Weight::Infinite(), Weight());
      }
    }
    net.MaxFlow(src, snk);
    std::vector<char> one_side = net.ReachableFrom(src);
    for (NodeId x = 0; x < n; ++x) {
      if (one_side[x]) agree[x] |= 1 << b;
    }
  }

  std::vector<std::vector<NodeId>> region(c.size() + 1);
  for (NodeId x = 0; x < n; ++x) {
    const int k = agree[x];
    if (k >= 1 && k <= static_cast<int>(c.size())) region[k].push_back(x);
  }

  std::vector<int> local(n, -1);
  for (size_t i = 0; i < c.size(); ++i) {
    NodeId v = c[i];
    CutSide cut = ExtractRegion(g, v, region[i + 1], local);
    cut.s = p;
    cut.t = v;
    out[v] = std::move(cut);
  }
  return out;
}

}  // namespace ght
