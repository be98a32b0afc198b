#include "ght/sparsify.hpp"

#include <queue>
#include <random>
#include <stdexcept>

namespace ght {

namespace {

// Kept multiplicity per edge: a copy of edge (x,y) scanned from x gets
// forest index r(y)+1, r(y)+2, ...; copies with index <= w survive.
std::vector<std::int64_t> KeptMultiplicity(const Graph& g, std::int64_t w) {
  const int n = g.num_nodes();
  std::vector<std::int64_t> r(n, 0);
  std::vector<char> scanned(n, 0);
  std::vector<std::int64_t> kept(g.num_edges(), 0);
  std::priority_queue<std::pair<std::int64_t, NodeId>> heap;
  for (NodeId start = 0; start < n; ++start) {
    if (scanned[start]) continue;
    heap.push({0, -start});
    while (!heap.empty()) {
      auto [key, neg] = heap.top();
      heap.pop();
      NodeId x = -neg;
      if (scanned[x] || key != r[x]) continue;
      scanned[x] = 1;
      for (const Incidence& inc : g.Neighbors(x)) {
        NodeId y = inc.to;
        if (scanned[y]) continue;
        std::int64_t mult = g.edge(inc.edge).mult;
        kept[inc.edge] = std::max<std::int64_t>(0, std::min(mult, w - r[y]));
        r[y] += mult;
        heap.push({r[y], -y});
      }
    }
  }
  return kept;
}

Graph Rebuild(const Graph& g, const std::vector<std::int64_t>& kept, const Graph* eps_source) {
  std::vector<Edge> edges;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (kept[i] == 0) continue;
    Edge e = g.edge(i);
    std::int64_t eps = 0;
    if (eps_source != nullptr) {
      const Edge& src = eps_source->edge(i);
      eps = kept[i] == e.mult ? src.eps : src.eps / e.mult * kept[i];
    }
    edges.push_back({e.u, e.v, kept[i], eps});
  }
  std::vector<std::vector<NodeId>> contents;
  std::vector<bool> contracted;
  std::vector<std::int64_t> loops;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    contents.push_back(g.Contents(v));
    contracted.push_back(g.IsContracted(v));
    loops.push_back(g.SelfLoops(v));
  }
  return Graph(std::move(contents), std::move(contracted), std::move(edges), std::move(loops));
}

}  // namespace

Graph NiSparsify(const Graph& g, std::int64_t w) {
  if (w < 1) throw std::invalid_argument("sparsifier parameter must be >= 1");
  return Rebuild(g, KeptMultiplicity(g, w), nullptr);
}

std::int64_t PerturbationRange(int n) {
  constexpr std::int64_t kCap = std::int64_t{1} << 40;
  std::int64_t range = 1;
  for (int i = 0; i < 7; ++i) {
    if (range > kCap / std::max(n, 1)) return kCap;
    range *= std::max(n, 1);
  }
  return std::min(range, kCap);
}

Graph Perturb(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> draw(1, PerturbationRange(g.num_nodes()));
  std::vector<std::int64_t> eps(g.num_edges());
  for (auto& e : eps) e = draw(rng);
  return g.WithEps(eps);
}

Graph PerturbedSparsifier(const Graph& g, const Graph& g_pert, std::int64_t w) {
  if (w < 1) throw std::invalid_argument("sparsifier parameter must be >= 1");
  if (g.num_nodes() != g_pert.num_nodes() || g.num_edges() != g_pert.num_edges()) {
    throw std::invalid_argument("perturbed graph does not match");
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& a = g.edge(i);
    const Edge& b = g_pert.edge(i);
    if (a.u != b.u || a.v != b.v || a.mult != b.mult) {
      throw std::invalid_argument("perturbed graph does not match");
    }
  }
  return Rebuild(g, KeptMultiplicity(g, w), &g_pert);
}

}  // namespace ght
