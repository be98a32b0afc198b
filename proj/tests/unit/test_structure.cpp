#include <gtest/gtest.h>

#include <algorithm>

#include "ght/generators.hpp"
#include "ght/gomory_hu.hpp"
#include "ght/structure.hpp"
#include "oracle.hpp"

namespace ght {
namespace {

std::vector<std::vector<NodeId>> SortedBags(const CutMembershipTree& tm) {
  std::vector<std::vector<NodeId>> out;
  for (const Bag& b : tm.bags) {
    std::vector<NodeId> nodes = b.nodes;
    std::sort(nodes.begin(), nodes.end());
    out.push_back(nodes);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PartitionTree TreeOf(int n, std::vector<TreeEdge> edges) {
  std::vector<std::vector<NodeId>> supers(n);
  for (NodeId v = 0; v < n; ++v) supers[v] = {v};
  return PartitionTree(n, supers, edges);
}

TEST(CutMembershipTree, StarFromCenter) {
  const PartitionTree t = ClassicGomoryHu(gen::Star(4));
  const CutMembershipTree tm = BuildCutMembershipTree(t, 0);
  EXPECT_EQ(tm.bags.size(), 5u);
  for (const Bag& b : tm.bags) EXPECT_EQ(b.nodes.size(), 1u);
  EXPECT_LE(CountNonEasyBags(gen::Star(4), t, 0, 1), 1);
}

TEST(CutMembershipTree, DecreasingPath) {
  const PartitionTree t = TreeOf(4, {{0, 1, Weight(3)}, {1, 2, Weight(2)}, {2, 3, Weight(1)}});
  const CutMembershipTree tm = BuildCutMembershipTree(t, 0);
  EXPECT_EQ(tm.bags.size(), 4u);
  EXPECT_EQ(tm.bags[tm.bag_of[3]].value, Weight(1));
}

TEST(CutMembershipTree, SharedLightestEdgeMergesSubtree) {
  // p - a is the lightest edge on every path from a, b, c, d.
  const PartitionTree t = TreeOf(
      5, {{0, 1, Weight(1)}, {1, 2, Weight(5)}, {1, 3, Weight(4)}, {3, 4, Weight(6)}});
  const CutMembershipTree tm = BuildCutMembershipTree(t, 0);
  ASSERT_EQ(tm.bags.size(), 2u);
  std::vector<NodeId> bag = tm.bags[1].nodes;
  std::sort(bag.begin(), bag.end());
  EXPECT_EQ(bag, (std::vector<NodeId>{1, 2, 3, 4}));
}

TEST(CutMembershipTree, TiesGoToTheLowerEdge) {
  const PartitionTree t = TreeOf(3, {{0, 1, Weight(2)}, {1, 2, Weight(2)}});
  const CutMembershipTree tm = BuildCutMembershipTree(t, 0);
  EXPECT_EQ(tm.bags.size(), 3u);
  EXPECT_THROW(BuildCutMembershipTree(PartitionTree(3), 0), std::invalid_argument);
}

TEST(WLargeSubtree, Thresholds) {
  const Graph g = gen::TwoCliques(4, 1);
  const PartitionTree t = ClassicGomoryHu(g);
  const CutMembershipTree tm = BuildCutMembershipTree(t, 5);
  EXPECT_EQ(WLargeSubtree(tm, 0).bags.size(), tm.bags.size());
  EXPECT_EQ(WLargeSubtree(tm, 100).bags.size(), 1u);
  const CutMembershipTree large = WLargeSubtree(tm, 2);
  for (const Bag& b : large.bags) {
    for (NodeId v : b.nodes) EXPECT_GE(v, 4);
  }
  EXPECT_EQ(large.bags.size(), 4u);
}

// Weighted tree 0 -3- 1, 1 -2- 2, 1 -2- 3, 2 -5- 4 used as its own graph:
// nodes 1 and 2 are hubs.
Graph TwoHub() { return Graph(5, {{0, 1, 3}, {1, 2, 2}, {1, 3, 2}, {2, 4, 5}}); }

TEST(Structure, TwoHubClassification) {
  const Graph g = TwoHub();
  const PartitionTree t = ClassicGomoryHu(g);
  const CutMembershipTree tm = BuildCutMembershipTree(t, 0);
  EXPECT_EQ(SortedBags(tm), (std::vector<std::vector<NodeId>>{{0}, {1}, {2, 4}, {3}}));
  std::vector<std::int64_t> deg(5);
  for (NodeId v = 0; v < 5; ++v) deg[v] = g.Degree(v).base;
  EXPECT_FALSE(IsEasyBag(tm, tm.bag_of[1], 2, deg));
  EXPECT_FALSE(IsEasyBag(tm, tm.bag_of[2], 2, deg));
  EXPECT_TRUE(IsEasyBag(tm, tm.bag_of[3], 2, deg));
  const StructureReport r2 = AnalyzeStructure(g, t, 0, 2);
  EXPECT_EQ(r2.large_bags, 3);
  EXPECT_EQ(r2.non_easy, 2);
  EXPECT_EQ(r2.non_easy_leaves, 1);
  EXPECT_EQ(r2.smallest_non_easy_leaf, 2);
  EXPECT_EQ(CountNonEasyBags(g, t, 0, 3), 1);
  EXPECT_EQ(CountNonEasyBags(g, t, 0, 6), 0);
}

// K5 holding p, a K4 joined by two edges, and a triangle hanging off the K4
// by one edge. Nodes 3 and 4 carry the links, so lambda(3,4) = 5 and they
// share a bag.
Graph NestedCliques() {
  std::vector<Edge> edges;
  auto clique = [&](std::vector<NodeId> nodes) {
    for (size_t a = 0; a < nodes.size(); ++a) {
      for (size_t b = a + 1; b < nodes.size(); ++b) edges.push_back({nodes[a], nodes[b]});
    }
  };
  clique({0, 1, 2, 3, 4});
  clique({5, 6, 7, 8});
  clique({9, 10, 11});
  edges.push_back({4, 5});
  edges.push_back({3, 6});
  edges.push_back({8, 9});
  return Graph(12, edges);
}

TEST(Structure, NestedCliquesBags) {
  const Graph g = NestedCliques();
  for (int algo : {0, 1}) {
    const PartitionTree t = algo == 0 ? ClassicGomoryHu(g) : Gusfield(g);
    const CutMembershipTree tm = BuildCutMembershipTree(t, 0);
    EXPECT_EQ(SortedBags(tm), (std::vector<std::vector<NodeId>>{
                                  {0}, {1}, {2}, {3, 4}, {5, 6, 7, 8}, {9, 10, 11}}));
    EXPECT_EQ(tm.bags[tm.bag_of[7]].value, Weight(2));
    EXPECT_EQ(tm.bags[tm.bag_of[10]].value, Weight(1));
    EXPECT_EQ(tm.bags[tm.bag_of[10]].parent, tm.bag_of[7]);
    std::vector<std::int64_t> deg(12);
    for (NodeId v = 0; v < 12; ++v) deg[v] = g.Degree(v).base;
    EXPECT_FALSE(IsEasyBag(tm, tm.bag_of[7], 2, deg));
    EXPECT_TRUE(IsEasyBag(tm, tm.bag_of[10], 3, deg));
    const CutMembershipTree large = WLargeSubtree(tm, 3);
    EXPECT_EQ(large.bags.size(), 4u);
  }
}

TEST(Structure, BagCutsAreMinimumCutsOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph g = gen::ErdosRenyi(13, 0.35, seed);
    const PartitionTree t = ClassicGomoryHu(g);
    const auto flows = oracle::AllPairs(g);
    for (NodeId p : {0, 6}) {
      const CutMembershipTree tm = BuildCutMembershipTree(t, p);
      for (size_t b = 1; b < tm.bags.size(); ++b) {
        const Bag& bag = tm.bags[b];
        EXPECT_LE(bag.value, tm.bags[bag.parent].value);
        std::vector<char> side(13, 0);
        for (NodeId v : bag.cut) side[v] = 1;
        EXPECT_FALSE(side[p]);
        EXPECT_EQ(CutValue(g, side), bag.value);
        for (NodeId v : bag.nodes) EXPECT_EQ(flows[p][v], bag.value);
      }
      for (std::int64_t w = 1; w <= 13; ++w) {
        const StructureReport r = AnalyzeStructure(g, t, p, w);
        EXPECT_LE(r.non_easy, 100000 * 13 / w);
        if (r.smallest_non_easy_leaf >= 0) EXPECT_GE(2 * r.smallest_non_easy_leaf, w);
      }
    }
  }
}

}  // namespace
}  // namespace ght
