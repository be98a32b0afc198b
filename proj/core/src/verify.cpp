#include "ght/verify.hpp"

#include <random>
#include <stdexcept>

#include "ght/flow.hpp"

namespace ght {

namespace {

constexpr size_t kMaxReported = 16;

void CheckShape(const Graph& g, const PartitionTree& t) {
  if (t.num_nodes() != g.num_nodes()) throw std::invalid_argument("tree does not match graph");
  if (!t.IsFull()) throw std::invalid_argument("tree is not fully resolved");
}

void CheckPair(const Graph& g, const PartitionTree& t, NodeId u, NodeId v, VerifyResult& r) {
  const Weight flow = MaxFlowMinCut(g, u, v).value;
  const TreeQueryResult q = TreeQuery(t, u, v);
  const Weight side = CutValue(g, q.side.side);
  ++r.pairs_checked;
  if (flow == q.value && side == q.value) return;
  r.ok = false;
  if (r.mismatches.size() < kMaxReported) r.mismatches.push_back({u, v, flow, q.value, side});
}

}  // namespace

VerifyResult VerifyTreeFull(const Graph& g, const PartitionTree& t, int oracle_limit) {
  CheckShape(g, t);
  if (g.num_nodes() > oracle_limit) throw std::invalid_argument("graph exceeds the oracle limit");
  VerifyResult r;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v = u + 1; v < g.num_nodes(); ++v) CheckPair(g, t, u, v, r);
  }
  return r;
}

VerifyResult VerifyTreeSampled(const Graph& g, const PartitionTree& t, int pairs,
                               std::uint64_t seed) {
  CheckShape(g, t);
  VerifyResult r;
  const int n = g.num_nodes();
  if (n < 2) return r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeId> pick(0, n - 1);
  for (int k = 0; k < pairs; ++k) {
    NodeId u = pick(rng), v = pick(rng);
    while (v == u) v = pick(rng);
    CheckPair(g, t, u, v, r);
  }
  return r;
}

}  // namespace ght
