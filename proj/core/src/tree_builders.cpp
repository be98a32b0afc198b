#include "ght/tree_builders.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "ght/auxiliary_graph.hpp"
#include "ght/gomory_hu.hpp"
#include "ght/sparsify.hpp"

namespace ght {

std::string AlgorithmName(Algorithm algo) {
  switch (algo) {
    case Algorithm::kClassic: return "classic";
    case Algorithm::kGusfield: return "gusfield";
    case Algorithm::kRandomized: return "randomized";
    case Algorithm::kDeterministic: return "deterministic";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(const std::string& name) {
  if (name == "classic") return Algorithm::kClassic;
  if (name == "gusfield") return Algorithm::kGusfield;
  if (name == "randomized") return Algorithm::kRandomized;
  if (name == "deterministic") return Algorithm::kDeterministic;
  throw std::invalid_argument("unknown algorithm: " + name);
}

bool IsGoodPivot(const std::vector<std::vector<char>>& cuts, int size) {
  std::vector<char> covered(size, 0);
  for (const auto& cut : cuts) {
    int count = 0;
    for (int x = 0; x < size; ++x) count += cut[x] != 0;
    if (2 * count > size) continue;
    for (int x = 0; x < size; ++x) {
      if (cut[x]) covered[x] = 1;
    }
  }
  const int rest = size - static_cast<int>(std::count(covered.begin(), covered.end(), 1));
  return 4 * rest <= 3 * size;
}

namespace {

std::uint64_t Mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Candidate {
  std::shared_ptr<const CutSide> cut;
  Weight value;
  int count = 0;
  NodeId min_root = 0;
};

// Good witnesses of the terminals of V_i, one entry per distinct cut.
std::vector<Candidate> GoodCandidates(const AuxiliaryGraph& aux, const EstimateTable& table) {
  const int size = aux.num_original;
  std::vector<Candidate> out;
  std::set<const CutSide*> seen;
  for (NodeId v = 0; v < size; ++v) {
    const Estimate& e = table.entries[v];
    if (v == table.pivot || !e.terminal || !e.witness) continue;
    if (!seen.insert(e.witness.get()).second) continue;
    Candidate c{e.witness, e.value, aux.OriginalCount(e.witness->side), -1};
    if (2 * c.count > size || c.count == 0) continue;
    for (NodeId x = 0; x < size; ++x) {
      if (e.witness->side[x] && (c.min_root < 0 || aux.local_to_root[x] < c.min_root)) {
        c.min_root = aux.local_to_root[x];
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Greedy choice of disjoint cuts, largest first. Overlaps that are not
// containments count as laminarity violations.
std::vector<int> ChooseCuts(const std::vector<Candidate>& cands, int num_local, int* violations) {
  std::vector<int> order(cands.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (cands[a].count != cands[b].count) return cands[a].count > cands[b].count;
    return cands[a].min_root < cands[b].min_root;
  });
  std::vector<int> owner(num_local, -1);
  std::vector<int> chosen;
  for (int c : order) {
    const auto& side = cands[c].cut->side;
    int first = -2;
    bool overlap = false, contained = true;
    for (NodeId x = 0; x < num_local; ++x) {
      if (!side[x]) continue;
      if (owner[x] != -1) overlap = true;
      if (first == -2) first = owner[x];
      if (owner[x] == -1 || owner[x] != first) contained = false;
    }
    if (overlap) {
      if (!contained) ++*violations;
      continue;
    }
    for (NodeId x = 0; x < num_local; ++x) {
      if (side[x]) owner[x] = c;
    }
    chosen.push_back(c);
  }
  return chosen;
}

void Absorb(BuildReport* report, const SingleSourceStats& stats, int n, bool keep) {
  if (report == nullptr) return;
  ++report->single_source_runs;
  report->pivot_changes += stats.pivot_changes;
  report->reset_estimates += stats.reset_estimates;
  report->alpha_increments += stats.alpha_increments;
  report->improving_cuts += stats.improving_cuts;
  report->duplicate_improving_cuts += stats.duplicate_improving_cuts;
  report->easy_improving_cuts += stats.easy_improving_cuts;
  for (const StageStats& st : stats.stages) {
    ++report->stages;
    if (st.fallback) ++report->fallback_stages;
    const auto& c = st.candidates;
    for (size_t r = 1; r < c.size(); ++r) {
      const bool flagged = st.fallback && r + 1 == c.size();
      if (!(2 * c[r] < c[r - 1]) && !flagged) ++report->halving_violations;
    }
    report->max_alpha_ratio = std::max(
        report->max_alpha_ratio, static_cast<double>(st.alpha_increments) * st.w / std::max(1, n));
  }
  if (keep) report->runs.push_back(stats);
}

// Splits super-node i along the chosen cuts; returns the new super-nodes.
std::vector<int> RefineWith(PartitionTree& tree, int i, const AuxiliaryGraph& aux,
                            const std::vector<Candidate>& cands, const std::vector<int>& chosen) {
  std::vector<int> pieces;
  for (int c : chosen) {
    pieces.push_back(
        tree.Refine(i, aux.ExpandSide(cands[c].cut->side), Weight(cands[c].value.base)));
  }
  return pieces;
}

PartitionTree PerComponent(const Graph& g, Algorithm algo, const BuildOptions& options,
                           BuildReport* report) {
  const int n = g.num_nodes();
  const std::vector<int> label = ComponentLabels(g);
  const int k = n == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<NodeId>> members(k);
  std::vector<int> local(n);
  for (NodeId v = 0; v < n; ++v) {
    local[v] = static_cast<int>(members[label[v]].size());
    members[label[v]].push_back(v);
  }
  std::vector<std::vector<Edge>> edges(k);
  for (const Edge& e : g.edges()) edges[label[e.u]].push_back({local[e.u], local[e.v], e.mult, e.eps});
  std::vector<std::vector<NodeId>> supers(n);
  for (NodeId v = 0; v < n; ++v) supers[v] = {v};
  std::vector<TreeEdge> out;
  for (int c = 0; c < k; ++c) {
    if (c > 0) out.push_back({members[0][0], members[c][0], Weight(0)});
    if (members[c].size() < 2) continue;
    Graph part(static_cast<int>(members[c].size()), std::move(edges[c]));
    PartitionTree sub = BuildTree(part, algo, options, report);
    for (const TreeEdge& e : sub.NodeEdges()) out.push_back({members[c][e.a], members[c][e.b], e.w});
  }
  return PartitionTree(n, std::move(supers), std::move(out));
}

void RequireSimpleConnected(const Graph& g) {
  if (!g.IsSimple()) throw std::invalid_argument("builder requires a simple graph");
  if (!g.IsConnected()) throw std::invalid_argument("builder requires a connected graph");
}

}  // namespace

PartitionTree BuildRandomized(const Graph& g, const BuildOptions& options, BuildReport* report) {
  RequireSimpleConnected(g);
  const int n = g.num_nodes();
  const std::int64_t k = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::sqrt(n)));
  PartitionTree tree = KPartialTree(g, k);
  if (tree.IsFull()) return tree;
  const double gamma = options.single_source.gamma;
  const int attempts =
      std::max(1, static_cast<int>(std::ceil(2 * gamma * std::log2(std::max(2, n)))));
  std::mt19937_64 rng(Mix(options.seed));
  std::uint64_t counter = 0;
  std::vector<std::pair<int, int>> work;
  for (int i = 0; i < tree.num_super(); ++i) work.emplace_back(i, 1);
  while (!work.empty()) {
    auto [i, depth] = work.back();
    work.pop_back();
    const int size = static_cast<int>(tree.Members(i).size());
    if (size < 2) continue;
    if (report) report->depth = std::max(report->depth, depth);
    bool done = false;
    for (int attempt = 0; attempt < attempts && !done; ++attempt) {
      AuxiliaryGraph aux = BuildAuxiliaryGraph(g, tree, i);
      const Graph pert = Perturb(aux.graph, Mix(options.seed ^ Mix(++counter)));
      const NodeId p = std::uniform_int_distribution<NodeId>(0, size - 1)(rng);
      SingleSourceConfig config = options.single_source;
      config.seed = Mix(options.seed + 0x51ed2700ULL * ++counter);
      SingleSourceResult ss = SingleSourceMinCuts(g, aux.graph, pert, p, config);
      Absorb(report, ss.stats, n, options.keep_runs);
      std::vector<Candidate> cands = GoodCandidates(aux, ss.table);
      std::vector<std::vector<char>> sides;
      for (const Candidate& c : cands) {
        sides.emplace_back(c.cut->side.begin(), c.cut->side.begin() + size);
      }
      if (!IsGoodPivot(sides, size)) {
        if (report) ++report->bad_pivots;
        continue;
      }
      int violations = 0;
      std::vector<int> chosen = ChooseCuts(cands, aux.graph.num_nodes(), &violations);
      if (report) report->laminarity_violations += violations;
      for (int piece : RefineWith(tree, i, aux, cands, chosen)) work.emplace_back(piece, depth + 1);
      work.emplace_back(i, depth + 1);
      done = true;
    }
    if (!done) throw BuildAbort("too many bad pivots in a row");
  }
  return tree;
}

PartitionTree BuildDeterministic(const Graph& g, const BuildOptions& options, BuildReport* report) {
  RequireSimpleConnected(g);
  const int n = g.num_nodes();
  PartitionTree tree(n);
  std::vector<std::pair<int, int>> work{{0, 1}};
  while (!work.empty()) {
    auto [i, depth] = work.back();
    work.pop_back();
    if (tree.Members(i).size() < 2) continue;
    if (report) report->depth = std::max(report->depth, depth);
    AuxiliaryGraph aux = BuildAuxiliaryGraph(g, tree, i);
    SingleSourceResult ss = SingleSourceDynamicPivot(g, aux.graph, options.single_source);
    Absorb(report, ss.stats, n, options.keep_runs);
    std::vector<Candidate> cands = GoodCandidates(aux, ss.table);
    int violations = 0;
    std::vector<int> chosen = ChooseCuts(cands, aux.graph.num_nodes(), &violations);
    if (report) report->laminarity_violations += violations;
    for (int piece : RefineWith(tree, i, aux, cands, chosen)) work.emplace_back(piece, depth + 1);
    work.emplace_back(i, depth + 1);
  }
  return tree;
}

PartitionTree BuildTree(const Graph& g, Algorithm algo, const BuildOptions& options,
                        BuildReport* report) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t flows = MaxFlowInvocations();
  const bool top = report != nullptr && report->algo.empty();
  if (top) {
    report->algo = AlgorithmName(algo);
    report->seed = options.seed;
  }
  PartitionTree tree;
  if (g.num_nodes() > 1 && !g.IsConnected()) {
    tree = PerComponent(g, algo, options, report);
  } else {
    switch (algo) {
      case Algorithm::kClassic: tree = ClassicGomoryHu(g); break;
      case Algorithm::kGusfield: tree = Gusfield(g); break;
      case Algorithm::kRandomized: tree = BuildRandomized(g, options, report); break;
      case Algorithm::kDeterministic: tree = BuildDeterministic(g, options, report); break;
    }
  }
  if (top) {
    report->maxflow_calls = MaxFlowInvocations() - flows;
    report->wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return tree;
}

PartitionTree BuildViaSubdivision(const Graph& g, Algorithm algo, const BuildOptions& options,
                                  BuildReport* report) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t flows = MaxFlowInvocations();
  const bool top = report != nullptr && report->algo.empty();
  if (top) {
    report->algo = AlgorithmName(algo) + "+subdivision";
    report->seed = options.seed;
  }
  const int n = g.num_nodes();
  Subdivision sub = Subdivide(g);
  const PartitionTree sub_tree = BuildTree(sub.graph, algo, options, report);
  PartitionTree tree = GusfieldWithOracle(n, [&](NodeId s, NodeId t) {
    TreeQueryResult q = TreeQuery(sub_tree, s, t);
    CutSide cut;
    cut.side.assign(q.side.side.begin(), q.side.side.begin() + n);
    cut.value = Weight(q.value.base);
    cut.s = s;
    cut.t = t;
    return cut;
  });
  if (top) {
    report->maxflow_calls = MaxFlowInvocations() - flows;
    report->wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return tree;
}

}  // namespace ght
