#include "ght/single_source.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "ght/isolating_cuts.hpp"
#include "ght/sparsify.hpp"
#include "ght/splitters.hpp"

namespace ght {

int OriginalCount(const Graph& g_aux, const std::vector<char>& side) {
  int count = 0;
  for (NodeId v = 0; v < g_aux.num_nodes(); ++v) {
    if (side[v] && !g_aux.IsContracted(v)) ++count;
  }
  return count;
}

namespace {

using CutPtr = std::shared_ptr<const CutSide>;

int CeilLog2(std::int64_t x) {
  int j = 0;
  while ((std::int64_t{1} << j) < x) ++j;
  return j;
}

int FloorLog2(std::int64_t x) {
  int j = 0;
  while ((std::int64_t{2} << j) <= x) ++j;
  return j;
}

class Engine {
 public:
  Engine(const Graph& g, const Graph& aux, const Graph& pert, bool dynamic,
         const SingleSourceConfig& config)
      : root_(g), aux_(aux), pert_(pert), dynamic_(dynamic), config_(config), rng_(config.seed) {
    n_ = aux_.num_nodes();
    if (pert_.num_nodes() != n_) throw std::invalid_argument("perturbed graph size mismatch");
    if (!aux_.IsConnected()) throw std::invalid_argument("auxiliary graph is not connected");
    for (NodeId v = 0; v < n_; ++v) {
      if (!aux_.IsContracted(v)) originals_.push_back(v);
    }
    N_ = std::max(2, root_.num_nodes());
    const double logn = std::log2(std::max(2, n_));
    phi_ = config_.phi > 0 ? config_.phi : std::pow(2.0, -std::sqrt(logn));
    threshold_ = config_.candidate_threshold >= 0 ? config_.candidate_threshold : logn;
    stats_.phi = phi_;
    stats_.righty_rounds = static_cast<int>(
        std::ceil(2 * std::numbers::e * config_.gamma / phi_ * std::log(static_cast<double>(N_))));
    proven_.assign(n_, 0);
    requeued_.assign(n_, 0);
  }

  SingleSourceResult Run(NodeId p) {
    if (p < 0 || p >= n_ || aux_.IsContracted(p)) {
      throw std::invalid_argument("pivot must be an original node");
    }
    table_.pivot = p;
    table_.entries.assign(n_, Estimate{});
    std::int64_t maxdeg = 0;
    for (NodeId v : originals_) {
      if (v == p) continue;
      Estimate& e = table_.entries[v];
      e.terminal = true;
      e.witness = Singleton(v);
      e.value = e.witness->value;
      maxdeg = std::max(maxdeg, pert_.Degree(v).base);
    }
    const std::uint64_t flows_before = MaxFlowInvocations();
    const int j_hi = std::max(CeilLog2(N_), CeilLog2(maxdeg + 1));
    int j_lo = 0;
    if (!dynamic_ && !config_.stage_from_zero) j_lo = FloorLog2(N_) / 2;
    for (int j = j_lo; j <= j_hi; ++j) Stage(std::int64_t{1} << j);
    stats_.maxflow_calls = MaxFlowInvocations() - flows_before;
    return {std::move(table_), std::move(stats_)};
  }

 private:
  NodeId pivot() const { return table_.pivot; }

  CutPtr Singleton(NodeId v) const {
    auto cut = std::make_shared<CutSide>();
    cut->side.assign(n_, 0);
    cut->side[v] = 1;
    cut->value = pert_.Degree(v);
    cut->s = pivot();
    cut->t = v;
    return cut;
  }

  bool Good(const CutSide& cut) const {
    return 2 * OriginalCount(aux_, cut.side) <= static_cast<int>(originals_.size());
  }

  // Exact value in the perturbed auxiliary graph for a cut found in G_w.
  Weight TrueValue(const CutSide& cut) const {
    return cut.value < Weight(2 * w_) ? cut.value : CutValue(pert_, cut.side);
  }

  bool TryUpdate(NodeId v, const CutPtr& cut, const Weight& value) {
    Estimate& e = table_.entries[v];
    if (!e.terminal || !cut->side[v] || cut->side[pivot()] || !(value < e.value)) return false;
    if (dynamic_ && !Good(*cut)) return false;
    SetEstimate(v, value, cut);
    return true;
  }

  void SetEstimate(NodeId v, const Weight& value, const CutPtr& cut) {
    Estimate& e = table_.entries[v];
    if (in_heap_.size() == static_cast<size_t>(n_) && in_heap_[v]) {
      heap_.erase({e.value, v});
      heap_.insert({value, v});
    }
    e.value = value;
    e.witness = cut;
  }

  void Stage(std::int64_t w) {
    w_ = w;
    StageStats st;
    st.w = w;
    gw_ = PerturbedSparsifier(aux_, pert_, 2 * w);
    std::fill(requeued_.begin(), requeued_.end(), 0);

    std::vector<NodeId> high;
    for (NodeId v : originals_) {
      if (v != pivot() && aux_.Degree(v).base >= w) high.push_back(v);
    }
    if (!high.empty()) st.easy_updates = Isolate(high);

    std::vector<char> in_c(n_, 0);
    int c_size = 0;
    for (NodeId v : originals_) {
      const Estimate& e = table_.entries[v];
      if (e.terminal && !proven_[v] && Weight(w) < e.value) {
        in_c[v] = 1;
        ++c_size;
      }
    }
    st.candidates.push_back(c_size);

    while (c_size > threshold_) {
      ++st.rounds;
      Demand d(n_, 0);
      for (NodeId v = 0; v < n_; ++v) {
        if (in_c[v]) d[v] = w;
      }
      Decomposition dec = DecomposeWithDemands(aux_, d, phi_, config_.decomposition);
      st.parts += static_cast<int>(dec.parts.size());
      st.certified_parts += dec.certified_parts;
      st.max_b_factor = std::max(st.max_b_factor, dec.b_factor);
      for (const ExpanderPart& part : dec.parts) {
        if (2 * static_cast<std::int64_t>(part.size_g) < w) continue;
        ++st.large_parts;
        std::vector<NodeId> local;
        for (NodeId v : part.nodes) {
          if (in_c[v]) local.push_back(v);
        }
        if (local.empty()) continue;
        Righty(local, st);
        Lefty(local, in_c, st);
        if (part.certified) {
          for (NodeId v : local) in_c[v] = 0;
        }
      }
      for (NodeId v = 0; v < n_; ++v) {
        if (in_c[v] && (!table_.entries[v].terminal || proven_[v])) in_c[v] = 0;
      }
      const int next = static_cast<int>(std::count(in_c.begin(), in_c.end(), 1));
      st.candidates.push_back(next);
      const bool halved = 2 * next < c_size;
      c_size = next;
      if (!halved) {
        st.fallback = true;
        break;
      }
    }

    for (NodeId v = 0; v < n_; ++v) {
      if ((in_c[v] || requeued_[v]) && table_.entries[v].terminal && !proven_[v]) {
        DirectSolve(v);
        ++st.direct_solves;
      }
    }
    for (NodeId v : originals_) {
      Estimate& e = table_.entries[v];
      if (e.terminal && e.value < Weight(2 * w)) e.done = true;
    }
    stats_.alpha_increments += st.alpha_increments;
    stats_.stages.push_back(std::move(st));
  }

  // Isolating cuts in G_w for terminals `s`; returns the number of updates.
  int Isolate(std::vector<NodeId> s) {
    std::erase_if(s, [&](NodeId v) { return !table_.entries[v].terminal; });
    if (s.empty()) return 0;
    std::map<NodeId, CutSide> cuts = IsolatingCuts(gw_, pivot(), s);
    if (dynamic_) {
      for (auto it = cuts.begin(); it != cuts.end(); ++it) {
        if (Good(it->second)) continue;
        const NodeId q = it->first;
        CutSide latest = LatestMinCut(gw_, pivot(), q);
        cuts.erase(it);
        if (latest.value < Weight(2 * w_)) {
          if (Good(latest)) {
            cuts.emplace(q, std::move(latest));
          } else {
            PivotChange(q, latest);
          }
        }
        break;
      }
    }
    int updates = 0;
    const Weight cap(2 * w_);
    for (auto& [v, cut] : cuts) {
      if (!(cut.value < cap)) continue;
      const Weight value = cut.value;
      if (TryUpdate(v, std::make_shared<const CutSide>(std::move(cut)), value)) ++updates;
    }
    return updates;
  }

  void Righty(const std::vector<NodeId>& local, StageStats& st) {
    if (dynamic_) {
      const int k = std::max(1, static_cast<int>(std::ceil(2 / phi_)));
      for (const std::vector<int>& set : Splitters(static_cast<int>(local.size()), k)) {
        std::vector<NodeId> sample;
        for (int i : set) sample.push_back(local[i]);
        ++st.righty_isolating_calls;
        Isolate(std::move(sample));
      }
      return;
    }
    std::bernoulli_distribution coin(std::min(1.0, phi_));
    for (int r = 0; r < stats_.righty_rounds; ++r) {
      std::vector<NodeId> sample;
      for (NodeId v : local) {
        if (coin(rng_)) sample.push_back(v);
      }
      if (sample.empty()) continue;
      ++st.righty_isolating_calls;
      Isolate(std::move(sample));
    }
  }

  void Lefty(const std::vector<NodeId>& local, std::vector<char>& in_c, StageStats& st) {
    in_heap_.assign(n_, 0);
    heap_.clear();
    for (NodeId v : local) {
      if (!table_.entries[v].terminal) continue;
      in_heap_[v] = 1;
      heap_.insert({table_.entries[v].value, v});
    }
    std::int64_t alpha = static_cast<std::int64_t>(std::ceil(3 / phi_));
    for (std::int64_t count = 0; count < alpha && !heap_.empty(); ++count) {
      const NodeId v = heap_.begin()->second;
      heap_.erase(heap_.begin());
      in_heap_[v] = 0;
      in_c[v] = 0;
      if (!table_.entries[v].terminal) continue;
      ++st.lefty_solves;
      auto cut = std::make_shared<CutSide>(LatestMinCut(gw_, pivot(), v));
      const bool exact = cut->value < Weight(2 * w_);
      if (dynamic_ && !Good(*cut)) {
        if (exact) PivotChange(v, *cut);
        continue;
      }
      const Weight value = TrueValue(*cut);
      cut->value = value;
      if (value < table_.entries[v].value) {
        ++alpha;
        ++st.alpha_increments;
        if (exact) RecordImproving(*cut);
      }
      CutPtr shared = cut;
      for (NodeId u = 0; u < n_; ++u) {
        if (cut->side[u]) TryUpdate(u, shared, value);
      }
      if (exact) proven_[v] = 1;
    }
    in_heap_.clear();
    heap_.clear();
  }

  void DirectSolve(NodeId v) {
    auto cut = std::make_shared<CutSide>(LatestMinCut(gw_, pivot(), v));
    const bool exact = cut->value < Weight(2 * w_);
    if (dynamic_ && !Good(*cut)) {
      if (exact) PivotChange(v, *cut);
      return;
    }
    cut->value = TrueValue(*cut);
    const Weight value = cut->value;
    TryUpdate(v, cut, value);
    if (exact) proven_[v] = 1;
  }

  void RecordImproving(const CutSide& cut) {
    ++stats_.improving_cuts;
    std::vector<NodeId> members;
    int high = 0;
    for (NodeId x = 0; x < n_; ++x) {
      if (!cut.side[x]) continue;
      for (NodeId r : aux_.Contents(x)) {
        members.push_back(r);
        if (root_.Degree(r).base >= w_) ++high;
      }
    }
    std::sort(members.begin(), members.end());
    if (config_.record_improving) stats_.improving.push_back({w_, members});
    if (!improving_.insert(std::move(members)).second) ++stats_.duplicate_improving_cuts;
    if (high <= 1) ++stats_.easy_improving_cuts;
  }

  // Makes q the pivot; `s_pq` is the latest minimum (p,q)-cut wrt p.
  void PivotChange(NodeId q, const CutSide& s_pq) {
    const NodeId p = pivot();
    PivotChangeEvent event;
    if (config_.on_pivot_change) event.before = table_.entries;
    ++stats_.pivot_changes;
    auto s_qp = std::make_shared<CutSide>(LatestMinCut(gw_, q, p));
    const Weight lambda = s_pq.value;
    s_qp->value = lambda;

    table_.pivot = q;
    Estimate& eq = table_.entries[q];
    eq = Estimate{};
    Estimate& ep = table_.entries[p];
    ep.terminal = true;
    ep.value = lambda;
    ep.witness = s_qp;
    ep.done = true;
    proven_[p] = 1;
    proven_[q] = 0;

    for (NodeId v : originals_) {
      if (v == p || v == q) continue;
      Estimate& e = table_.entries[v];
      if (lambda < e.value && s_qp->side[v]) {
        SetEstimate(v, lambda, s_qp);
      } else if (e.witness->side[q]) {
        CutPtr single = Singleton(v);
        SetEstimate(v, single->value, single);
        e.done = false;
        proven_[v] = 0;
        requeued_[v] = 1;
        ++stats_.reset_estimates;
      }
    }
    if (in_heap_.size() == static_cast<size_t>(n_) && in_heap_[q]) {
      std::erase_if(heap_, [q](const auto& item) { return item.second == q; });
      in_heap_[q] = 0;
    }
    if (config_.on_pivot_change) {
      event.old_pivot = p;
      event.new_pivot = q;
      event.lambda = lambda;
      event.w = w_;
      event.after = table_.entries;
      config_.on_pivot_change(event);
    }
  }

  struct HeapOrder {
    bool operator()(const std::pair<Weight, NodeId>& a, const std::pair<Weight, NodeId>& b) const {
      if (a.first != b.first) return b.first < a.first;
      return a.second < b.second;
    }
  };

  const Graph& root_;
  const Graph& aux_;
  const Graph& pert_;
  bool dynamic_;
  const SingleSourceConfig& config_;
  std::mt19937_64 rng_;
  int n_ = 0;
  int N_ = 2;
  double phi_ = 1;
  double threshold_ = 1;
  std::vector<NodeId> originals_;
  EstimateTable table_;
  SingleSourceStats stats_;
  std::int64_t w_ = 1;
  Graph gw_;
  std::vector<char> proven_;
  std::vector<char> requeued_;
  std::vector<char> in_heap_;
  std::set<std::pair<Weight, NodeId>, HeapOrder> heap_;
  std::set<std::vector<NodeId>> improving_;
};

}  // namespace

SingleSourceResult SingleSourceMinCuts(const Graph& g, const Graph& g_aux, const Graph& g_pert,
                                       NodeId p, const SingleSourceConfig& config) {
  Engine engine(g, g_aux, g_pert, false, config);
  return engine.Run(p);
}

SingleSourceResult SingleSourceDynamicPivot(const Graph& g, const Graph& g_aux,
                                            const SingleSourceConfig& config) {
  NodeId p = config.forced_pivot;
  if (p < 0) {
    for (NodeId v = 0; v < g_aux.num_nodes(); ++v) {
      if (g_aux.IsContracted(v)) continue;
      if (p < 0 || g_aux.Degree(p) < g_aux.Degree(v)) p = v;
    }
  }
  if (p < 0) throw std::invalid_argument("auxiliary graph has no original node");
  const Graph plain = g_aux.IsPerturbed() ? g_aux.WithEps(std::vector<std::int64_t>(g_aux.num_edges(), 0))
                                          : g_aux;
  Engine engine(g, plain, plain, true, config);
  return engine.Run(p);
}

}  // namespace ght
