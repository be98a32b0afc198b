#include <benchmark/benchmark.h>

#include <algorithm>

#include "ght/flow.hpp"
#include "ght/generators.hpp"
#include "ght/isolating_cuts.hpp"
#include "ght/sparsify.hpp"
#include "ght/tree_builders.hpp"

namespace {

using namespace ght;

Graph SparseGraph(int n) { return gen::ErdosRenyi(n, std::min(1.0, 12.0 / (n - 1)), 1000 + n); }

void RunBuilder(benchmark::State& state, Algorithm algo) {
  const Graph g = SparseGraph(static_cast<int>(state.range(0)));
  BuildOptions options;
  BuildReport report;
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildTree(g, algo, options, &report));
  }
  state.counters["maxflow_calls"] = static_cast<double>(report.maxflow_calls);
  state.counters["depth"] = report.depth;
}

void BM_Classic(benchmark::State& state) { RunBuilder(state, Algorithm::kClassic); }
void BM_Gusfield(benchmark::State& state) { RunBuilder(state, Algorithm::kGusfield); }
void BM_Randomized(benchmark::State& state) { RunBuilder(state, Algorithm::kRandomized); }
void BM_Deterministic(benchmark::State& state) { RunBuilder(state, Algorithm::kDeterministic); }

BENCHMARK(BM_Classic)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gusfield)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Randomized)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Deterministic)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_MaxFlow(benchmark::State& state) {
  const Graph g = SparseGraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(MaxFlowMinCut(g, 0, g.num_nodes() - 1));
}
BENCHMARK(BM_MaxFlow)->RangeMultiplier(4)->Range(256, 4096);

void BM_NiSparsify(benchmark::State& state) {
  const Graph g = SparseGraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(NiSparsify(g, 4));
}
BENCHMARK(BM_NiSparsify)->RangeMultiplier(4)->Range(256, 4096);

void BM_IsolatingCuts(benchmark::State& state) {
  const Graph g = SparseGraph(static_cast<int>(state.range(0)));
  std::vector<NodeId> c;
  for (NodeId v = 1; v < g.num_nodes(); v += 7) c.push_back(v);
  for (auto _ : state) benchmark::DoNotOptimize(IsolatingCuts(g, 0, c));
}
BENCHMARK(BM_IsolatingCuts)->RangeMultiplier(4)->Range(256, 4096);

}  // namespace

BENCHMARK_MAIN();
