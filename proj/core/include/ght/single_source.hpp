#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "ght/expander.hpp"
#include "ght/flow.hpp"
#include "ght/graph.hpp"

namespace ght {

struct Estimate {
  Weight value;
  // Side containing the node and not the pivot; its value in the
  // (perturbed) auxiliary graph equals `value`.
  std::shared_ptr<const CutSide> witness;
  bool terminal = false;  // original node other than the pivot
  bool done = false;      // value known to equal the connectivity to the pivot
};

// Per-node state of a single-source run, indexed by auxiliary-graph node.
struct EstimateTable {
  NodeId pivot = -1;
  std::vector<Estimate> entries;
};

struct StageStats {
  std::int64_t w = 0;
  std::vector<int> candidates;  // |C| at the start and after every round
  int rounds = 0;
  int parts = 0;
  int certified_parts = 0;
  int large_parts = 0;
  bool fallback = false;        // a round failed to halve C
  int easy_updates = 0;
  int righty_isolating_calls = 0;
  int lefty_solves = 0;
  int alpha_increments = 0;
  int direct_solves = 0;
  double max_b_factor = 0;
};

struct ImprovingCut {
  std::int64_t w = 0;
  std::vector<NodeId> members;  // root-graph nodes, sorted
};

struct SingleSourceStats {
  double phi = 0;
  int righty_rounds = 0;
  std::vector<StageStats> stages;
  int pivot_changes = 0;
  int reset_estimates = 0;
  std::int64_t alpha_increments = 0;
  int improving_cuts = 0;
  int duplicate_improving_cuts = 0;
  int easy_improving_cuts = 0;
  std::uint64_t maxflow_calls = 0;
  std::vector<ImprovingCut> improving;  // filled when record_improving is set
};

struct PivotChangeEvent {
  NodeId old_pivot = -1;
  NodeId new_pivot = -1;
  Weight lambda;
  std::int64_t w = 0;
  std::vector<Estimate> before;
  std::vector<Estimate> after;
};

struct SingleSourceConfig {
  double phi = 0;                  // 0 selects 2^{-sqrt(log2 n)}
  double gamma = 2;
  double candidate_threshold = -1; // negative selects log2 n
  bool stage_from_zero = false;
  std::uint64_t seed = 1;
  DecompositionConfig decomposition{12, 300, 200};
  bool record_improving = false;
  NodeId forced_pivot = -1;        // dynamic-pivot test hook
  std::function<void(const PivotChangeEvent&)> on_pivot_change;
};

struct SingleSourceResult {
  EstimateTable table;
  SingleSourceStats stats;
};

// Minimum (p,v)-cuts in `g_pert` for every original node v of the
// auxiliary graph `g_aux` of root graph `g`. `g_pert` is `g_aux` with a
// perturbation; stages start at floor(log2 sqrt(N)) unless configured to
// start at zero.
SingleSourceResult SingleSourceMinCuts(const Graph& g, const Graph& g_aux, const Graph& g_pert,
                                       NodeId p, const SingleSourceConfig& config = {});

// Deterministic variant without perturbation. The pivot may move during
// the run; the final pivot is table.pivot and every witness holds at most
// half of the original nodes.
SingleSourceResult SingleSourceDynamicPivot(const Graph& g, const Graph& g_aux,
                                            const SingleSourceConfig& config = {});

// Number of original (non-contracted) nodes of `g_aux` on `side`.
int OriginalCount(const Graph& g_aux, const std::vector<char>& side);

}  // namespace ght
