#include "ght/flow.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace ght {

namespace {

std::atomic<std::uint64_t> g_invocations{0};

}  // namespace

std::uint64_t MaxFlowInvocations() { return g_invocations.load(std::memory_order_relaxed); }
void CountMaxFlowInvocation() { g_invocations.fetch_add(1, std::memory_order_relaxed); }

int CutSide::Size() const {
  int k = 0;
  for (char c : side) k += c != 0;
  return k;
}

std::vector<NodeId> CutSide::Members() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < static_cast<NodeId>(side.size()); ++v) {
    if (side[v]) out.push_back(v);
  }
  return out;
}

FlowNetwork::FlowNetwork(int n) : head_(n, -1) {}

FlowNetwork FlowNetwork::FromGraph(const Graph& g) {
  FlowNetwork net(g.num_nodes());
  net.arcs_.reserve(2 * g.edges().size());
  for (const Edge& e : g.edges()) net.AddUndirected(e.u, e.v, e.weight());
  return net;
}

int FlowNetwork::AddNode() {
  head_.push_back(-1);
  return static_cast<int>(head_.size()) - 1;
}

void FlowNetwork::AddArc(int u, int v, Weight cap, Weight rev_cap) {
  arcs_.push_back({v, head_[u], cap});
  head_[u] = static_cast<int>(arcs_.size()) - 1;
  arcs_.push_back({u, head_[v], rev_cap});
  head_[v] = static_cast<int>(arcs_.size()) - 1;
}

bool FlowNetwork::Bfs(int s, int t) {
  level_.assign(head_.size(), -1);
  std::vector<int> queue{s};
  level_[s] = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    int u = queue[i];
    for (int a = head_[u]; a != -1; a = arcs_[a].next) {
      int v = arcs_[a].to;
      if (level_[v] == -1 && arcs_[a].cap.IsPositive()) {
        level_[v] = level_[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return level_[t] != -1;
}

Weight FlowNetwork::Dfs(int u, int t, Weight limit) {
  if (u == t) return limit;
  Weight pushed;
  for (int& a = cur_[u]; a != -1; a = arcs_[a].next) {
    Arc& arc = arcs_[a];
    if (level_[arc.to] != level_[u] + 1 || !arc.cap.IsPositive()) continue;
    Weight got = Dfs(arc.to, t, Min(limit - pushed, arc.cap));
    if (got.IsPositive()) {
      arc.cap -= got;
      arcs_[a ^ 1].cap += got;
      pushed += got;
      if (pushed == limit) return pushed;
    }
  }
  level_[u] = -1;
  return pushed;
}

Weight FlowNetwork::MaxFlow(int s, int t) {
  if (s == t) throw std::invalid_argument("source equals sink");
  CountMaxFlowInvocation();
  Weight total;
  while (Bfs(s, t)) {
    cur_ = head_;
    total += Dfs(s, t, Weight::Infinite() * 4);
  }
  return total;
}

std::vector<char> FlowNetwork::ReachableFrom(int s) const {
  std::vector<char> seen(head_.size(), 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int a = head_[u]; a != -1; a = arcs_[a].next) {
      int v = arcs_[a].to;
      if (!seen[v] && arcs_[a].cap.IsPositive()) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

std::vector<char> FlowNetwork::CanReach(int t) const {
  std::vector<char> seen(head_.size(), 0);
  std::vector<int> stack{t};
  seen[t] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    // Arc a leaves u; its partner a^1 is the arc v->u.
    for (int a = head_[u]; a != -1; a = arcs_[a].next) {
      int v = arcs_[a].to;
      if (!seen[v] && arcs_[a ^ 1].cap.IsPositive()) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

namespace {

void CheckTerminals(const Graph& g, NodeId s, NodeId t) {
  if (s < 0 || t < 0 || s >= g.num_nodes() || t >= g.num_nodes()) {
    throw std::invalid_argument("terminal out of range");
  }
  if (s == t) throw std::invalid_argument("terminals must differ");
}

}  // namespace

CutSide MaxFlowMinCut(const Graph& g, NodeId s, NodeId t) {
  CheckTerminals(g, s, t);
  FlowNetwork net = FlowNetwork::FromGraph(g);
  CutSide cut;
  cut.value = net.MaxFlow(s, t);
  cut.side = net.ReachableFrom(s);
  cut.s = s;
  cut.t = t;
  return cut;
}

CutSide LatestMinCut(const Graph& g, NodeId s, NodeId t) {
  CheckTerminals(g, s, t);
  FlowNetwork net = FlowNetwork::FromGraph(g);
  CutSide cut;
  cut.value = net.MaxFlow(s, t);
  cut.side = net.CanReach(t);
  cut.s = s;
  cut.t = t;
  return cut;
}

std::vector<std::vector<Weight>> AllPairsOracle(const Graph& g, int limit) {
  const int n = g.num_nodes();
  if (n > limit) {
    throw std::invalid_argument("oracle limit exceeded: n = " + std::to_string(n));
  }
  std::vector<std::vector<Weight>> lambda(n, std::vector<Weight>(n));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      FlowNetwork net = FlowNetwork::FromGraph(g);
      lambda[u][v] = lambda[v][u] = net.MaxFlow(u, v);
    }
  }
  return lambda;
}

}  // namespace ght
