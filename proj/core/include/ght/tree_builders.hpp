#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ght/graph.hpp"
#include "ght/partition_tree.hpp"
#include "ght/single_source.hpp"

namespace ght {

enum class Algorithm { kClassic, kGusfield, kRandomized, kDeterministic };

std::string AlgorithmName(Algorithm algo);
// Accepts classic, gusfield, randomized, deterministic.
Algorithm ParseAlgorithm(const std::string& name);

// Thrown when the randomized builder meets too many bad pivots in a row.
class BuildAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuildOptions {
  std::uint64_t seed = 1;
  SingleSourceConfig single_source;
  bool keep_runs = false;  // store per-run single-source stats in the report
};

struct BuildReport {
  std::string algo;
  std::uint64_t seed = 0;
  std::uint64_t maxflow_calls = 0;
  int depth = 0;
  int single_source_runs = 0;
  int bad_pivots = 0;
  int pivot_changes = 0;
  int reset_estimates = 0;
  int laminarity_violations = 0;
  int stages = 0;
  int fallback_stages = 0;
  int halving_violations = 0;  // rounds that failed to halve without a fallback flag
  std::int64_t alpha_increments = 0;
  double max_alpha_ratio = 0;  // max over stages of increments * w / N
  int improving_cuts = 0;
  int duplicate_improving_cuts = 0;
  int easy_improving_cuts = 0;
  double wall_ms = 0;
  std::vector<SingleSourceStats> runs;
};

// Membership vectors over V_i, one per non-pivot member. A cut is good when
// it holds at most half of V_i; the pivot is good when the members covered
// by no good cut number at most 3|V_i|/4.
bool IsGoodPivot(const std::vector<std::vector<char>>& cuts, int size);

// Randomized pivot recursion bootstrapped by a floor(sqrt(N))-partial tree.
// Requires a simple graph; throws BuildAbort after a streak of bad pivots.
PartitionTree BuildRandomized(const Graph& g, const BuildOptions& options = {},
                              BuildReport* report = nullptr);

// Deterministic dynamic-pivot recursion. Requires a simple graph.
PartitionTree BuildDeterministic(const Graph& g, const BuildOptions& options = {},
                                 BuildReport* report = nullptr);

// Any algorithm on any multigraph. Disconnected graphs are built per
// component and joined by weight-0 edges.
PartitionTree BuildTree(const Graph& g, Algorithm algo, const BuildOptions& options = {},
                        BuildReport* report = nullptr);

// Builds a tree of the subdivided (simple) graph with `algo` and projects it
// onto the original nodes through Gusfield's construction.
PartitionTree BuildViaSubdivision(const Graph& g, Algorithm algo, const BuildOptions& options = {},
                                  BuildReport* report = nullptr);

}  // namespace ght
