#include <gtest/gtest.h>

#include <sstream>

#include "ght/generators.hpp"
#include "ght/gomory_hu.hpp"
#include "ght/tree_builders.hpp"
#include "oracle.hpp"

namespace ght {
namespace {

void ExpectOracleEqual(const Graph& g, const PartitionTree& t) {
  std::string why;
  EXPECT_TRUE(oracle::TreeMatches(t, oracle::AllPairs(g), &why)) << why;
}

TEST(BuildRandomized, CompleteGraphGivesStar) {
  const Graph g = gen::Complete(4);
  const PartitionTree t = BuildRandomized(g);
  for (const TreeEdge& e : t.edges()) EXPECT_EQ(e.w, Weight(3));
  ExpectOracleEqual(g, t);
}

TEST(BuildRandomized, PathGivesPath) {
  const Graph g = gen::Path(8);
  const PartitionTree t = BuildRandomized(g);
  for (const TreeEdge& e : t.edges()) EXPECT_EQ(e.w, Weight(1));
  ExpectOracleEqual(g, t);
}

TEST(BuildRandomized, RandomGraphsMatchOracleAcrossSeeds) {
  for (int n : {10, 18, 30}) {
    for (double p : {0.2, 0.5, 0.8}) {
      const Graph g = gen::ErdosRenyi(n, p, n * 31 + static_cast<int>(p * 10));
      const auto flows = oracle::AllPairs(g);
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        BuildOptions options;
        options.seed = seed;
        BuildReport report;
        const PartitionTree t = BuildTree(g, Algorithm::kRandomized, options, &report);
        std::string why;
        EXPECT_TRUE(oracle::TreeMatches(t, flows, &why)) << n << " " << p << " " << why;
        EXPECT_EQ(report.halving_violations, 0);
      }
    }
  }
}

TEST(BuildDeterministic, CompleteGraphIsReproducible) {
  const Graph g = gen::Complete(4);
  const PartitionTree a = BuildDeterministic(g);
  const PartitionTree b = BuildDeterministic(g);
  EXPECT_EQ(TreeToString(a), TreeToString(b));
  ExpectOracleEqual(g, a);
}

TEST(BuildDeterministic, PathGivesPath) {
  const Graph g = gen::Path(8);
  ExpectOracleEqual(g, BuildDeterministic(g));
}

TEST(BuildDeterministic, RandomGraphsMatchOracleWithBoundedDepth) {
  for (int n : {9, 16, 25, 40}) {
    for (double p : {0.2, 0.5, 0.8}) {
      const Graph g = gen::ErdosRenyi(n, p, n * 7 + static_cast<int>(p * 10));
      BuildReport report;
      const PartitionTree t = BuildTree(g, Algorithm::kDeterministic, {}, &report);
      ExpectOracleEqual(g, t);
      int bound = 1;
      while ((1 << (bound - 1)) < n) ++bound;
      EXPECT_LE(report.depth, bound);
      EXPECT_EQ(report.laminarity_violations, 0);
    }
  }
}

TEST(IsGoodPivot, Cases) {
  // Star pivot: every cut a singleton.
  std::vector<std::vector<char>> star = {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  EXPECT_TRUE(IsGoodPivot(star, 4));
  // Leaf pivot: every cut holds all but the pivot.
  std::vector<std::vector<char>> leaf = {{0, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}};
  EXPECT_FALSE(IsGoodPivot(leaf, 4));
  EXPECT_TRUE(IsGoodPivot({{0, 1}}, 2));
}

TEST(BuildTree, DisconnectedGraphGetsZeroLinks) {
  const Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
  for (Algorithm algo : {Algorithm::kClassic, Algorithm::kGusfield, Algorithm::kRandomized,
                         Algorithm::kDeterministic}) {
    ExpectOracleEqual(g, BuildTree(g, algo));
  }
}

TEST(BuildTree, RejectsMultigraphForNewBuilders) {
  const Graph g(2, {{0, 1, 2}});
  EXPECT_THROW(BuildTree(g, Algorithm::kDeterministic), std::invalid_argument);
  EXPECT_NO_THROW(BuildTree(g, Algorithm::kClassic));
}

TEST(BuildViaSubdivision, MatchesDirectMultigraphTree) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = gen::RandomMultigraph(8, 0.5, 3, seed);
    const auto flows = oracle::AllPairs(g);
    for (Algorithm algo : {Algorithm::kRandomized, Algorithm::kDeterministic}) {
      std::string why;
      EXPECT_TRUE(oracle::TreeMatches(BuildViaSubdivision(g, algo), flows, &why)) << why;
    }
  }
}

TEST(BuildViaSubdivision, DoubledCompleteGraph) {
  std::vector<Edge> edges;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) edges.push_back({a, b, 2});
  }
  const Graph g(4, edges);
  ExpectOracleEqual(g, BuildViaSubdivision(g, Algorithm::kDeterministic));
}

}  // namespace
}  // namespace ght
