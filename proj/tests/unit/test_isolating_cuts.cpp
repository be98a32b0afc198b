#include <gtest/gtest.h>

#include <random>

#include "ght/generators.hpp"
#include "ght/isolating_cuts.hpp"
#include "oracle.hpp"

namespace ght {
namespace {

TEST(IsolatingCuts, StarLeaves) {
  const Graph g = gen::Star(5);
  const auto cuts = IsolatingCuts(g, 0, {1, 2, 3, 4, 5});
  ASSERT_EQ(cuts.size(), 5u);
  for (const auto& [v, c] : cuts) {
    EXPECT_EQ(c.value, Weight(1));
    EXPECT_EQ(c.Members(), (std::vector<NodeId>{v}));
  }
}

TEST(IsolatingCuts, SingletonIsLatestCut) {
  const Graph g = gen::Star(3);
  const auto cuts = IsolatingCuts(g, 1, {0});
  EXPECT_EQ(cuts.at(0).Members(), LatestMinCut(g, 1, 0).Members());
}

TEST(IsolatingCuts, Dumbbell) {
  const Graph g = gen::TwoCliques(4, 1);
  const auto cuts = IsolatingCuts(g, 5, {1, 6});
  EXPECT_EQ(cuts.at(1).value, Weight(1));
  EXPECT_EQ(cuts.at(1).Members(), (std::vector<NodeId>{0, 1, 2, 3}));
  EXPECT_EQ(cuts.at(6).value, Weight(3));
  EXPECT_EQ(cuts.at(6).Members(), (std::vector<NodeId>{6}));
}

TEST(IsolatingCuts, Errors) {
  const Graph g = gen::Path(4);
  EXPECT_THROW(IsolatingCuts(g, 0, {}), std::invalid_argument);
  EXPECT_THROW(IsolatingCuts(g, 0, {0, 1}), std::invalid_argument);
  EXPECT_THROW(IsolatingCuts(Graph(3, {{0, 1}}), 0, {1}), std::invalid_argument);
}

TEST(IsolatingCuts, ContractOnRandomGraphs) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = gen::ErdosRenyi(10, 0.45, seed);
    if (!g.IsConnected()) continue;
    for (int trial = 0; trial < 10; ++trial) {
      const NodeId p = static_cast<NodeId>(rng() % 10);
      std::vector<NodeId> c;
      for (NodeId v = 0; v < 10 && c.size() < 1 + rng() % 5; ++v) {
        if (v != p && rng() % 2) c.push_back(v);
      }
      if (c.empty()) continue;
      const std::uint64_t before = MaxFlowInvocations();
      const auto cuts = IsolatingCuts(g, p, c);
      int log = 0;
      while ((1u << log) < c.size()) ++log;
      EXPECT_LE(MaxFlowInvocations() - before, static_cast<std::uint64_t>(log + c.size() + 1));
      std::vector<int> owner(10, -1);
      for (const auto& [v, cut] : cuts) {
        EXPECT_FALSE(cut.side[p]);
        EXPECT_TRUE(cut.side[v]);
        for (NodeId x = 0; x < 10; ++x) {
          if (!cut.side[x]) continue;
          EXPECT_EQ(owner[x], -1);
          owner[x] = v;
        }
        const oracle::MinCuts all = oracle::EnumerateMinCuts(g, p, v);
        const std::uint32_t latest = oracle::MinimalTSide(all);
        bool alone = true;
        for (NodeId u : c) alone &= u == v || !((latest >> u) & 1);
        if (alone) {
          EXPECT_EQ(oracle::ToMask(cut.side), latest);
          EXPECT_EQ(cut.value, all.value);
        }
      }
    }
  }
}

}  // namespace
}  // namespace ght
