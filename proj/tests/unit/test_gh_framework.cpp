#include <gtest/gtest.h>

#include "ght/auxiliary_graph.hpp"
#include "ght/generators.hpp"
#include "ght/gomory_hu.hpp"
#include "oracle.hpp"

namespace ght {
namespace {

void ExpectOracleEqual(const Graph& g, const PartitionTree& t) {
  std::string why;
  EXPECT_TRUE(oracle::TreeMatches(t, oracle::AllPairs(g), &why)) << why;
}

// Each tree edge's weight equals the value of the bipartition it induces.
void ExpectEdgeValues(const Graph& g, const PartitionTree& t) {
  for (int e = 0; e < static_cast<int>(t.edges().size()); ++e) {
    const TreeEdge& edge = t.edges()[e];
    const std::vector<char> side = t.ComponentNodes(edge.a, edge.b);
    EXPECT_EQ(CutValue(g, side), edge.w);
  }
}

TEST(GhRefine, PathSplit) {
  const Graph g = gen::Path(3);
  PartitionTree t(3);
  const AuxiliaryGraph aux = BuildAuxiliaryGraph(g, t, 0);
  CutSide cut;
  cut.side = {0, 0, 1};
  cut.value = Weight(1);
  GhRefine(t, aux, cut, 2, 0);
  EXPECT_EQ(t.num_super(), 2);
  EXPECT_EQ(t.edges()[0].w, Weight(1));
  ExpectEdgeValues(g, t);
}

TEST(GhRefine, RejectsNonSeparatingCut) {
  const Graph g = gen::Complete(4);
  PartitionTree t(4);
  const AuxiliaryGraph aux = BuildAuxiliaryGraph(g, t, 0);
  CutSide cut;
  cut.side = {1, 1, 0, 0};
  cut.value = Weight(4);
  EXPECT_THROW(GhRefine(t, aux, cut, 0, 1), std::invalid_argument);
  cut.side = {1, 0};
  EXPECT_THROW(GhRefine(t, aux, cut, 0, 2), std::invalid_argument);
}

TEST(GhRefine, SimultaneousCutsEqualSequentialSteps) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = gen::ErdosRenyi(9, 0.5, seed);
    if (!g.IsConnected()) continue;
    // Latest cuts from node 0 isolate disjoint or nested sets.
    std::vector<CutSide> cuts;
    for (NodeId v = 1; v < 9; ++v) cuts.push_back(LatestMinCut(g, 0, v));
    std::vector<CutSide> maximal;
    for (const CutSide& c : cuts) {
      bool inside = false;
      for (const CutSide& d : cuts) {
        if (&c == &d || d.Size() <= c.Size()) continue;
        bool sub = true;
        for (int x = 0; x < 9; ++x) sub &= !c.side[x] || d.side[x];
        inside |= sub;
      }
      bool dup = false;
      for (const CutSide& m : maximal) dup |= m.side == c.side;
      if (!inside && !dup) maximal.push_back(c);
    }
    PartitionTree at_once(9);
    for (const CutSide& c : maximal) at_once.Refine(0, c.side, c.value);
    PartitionTree sequential(9);
    for (const CutSide& c : maximal) {
      const int i = sequential.SuperOf(0);
      const AuxiliaryGraph aux = BuildAuxiliaryGraph(g, sequential, i);
      std::vector<char> local(aux.graph.num_nodes(), 0);
      for (NodeId x = 0; x < 9; ++x) {
        if (c.side[x]) local[aux.root_to_local[x]] = 1;
      }
      CutSide lc;
      lc.side = local;
      lc.value = CutValue(aux.graph, local);
      EXPECT_EQ(lc.value, c.value);
      GhRefine(sequential, aux, lc, aux.root_to_local[c.t], aux.root_to_local[0]);
    }
    EXPECT_EQ(at_once.num_super(), sequential.num_super());
    for (NodeId x = 0; x < 9; ++x) {
      for (NodeId y = 0; y < 9; ++y) {
        EXPECT_EQ(at_once.SuperOf(x) == at_once.SuperOf(y),
                  sequential.SuperOf(x) == sequential.SuperOf(y));
      }
    }
    ExpectEdgeValues(g, at_once);
  }
}

TEST(ClassicGomoryHu, SmallCases) {
  const PartitionTree path = ClassicGomoryHu(gen::Path(6));
  for (const TreeEdge& e : path.edges()) EXPECT_EQ(e.w, Weight(1));
  const PartitionTree k4 = ClassicGomoryHu(gen::Complete(4));
  for (const TreeEdge& e : k4.edges()) EXPECT_EQ(e.w, Weight(3));
  const Graph g = gen::ErdosRenyi(12, 0.4, 12);
  const PartitionTree t = ClassicGomoryHu(g);
  ExpectOracleEqual(g, t);
  ExpectEdgeValues(g, t);
}

TEST(ClassicGomoryHu, UsesNMinusOneFlows) {
  const std::uint64_t before = MaxFlowInvocations();
  ClassicGomoryHu(gen::Complete(4));
  EXPECT_EQ(MaxFlowInvocations() - before, 3u);
}

TEST(Gusfield, SmallCases) {
  ExpectOracleEqual(gen::Path(6), Gusfield(gen::Path(6)));
  ExpectOracleEqual(gen::Complete(4), Gusfield(gen::Complete(4)));
  const Graph g = gen::ErdosRenyi(12, 0.4, 12);
  ExpectOracleEqual(g, Gusfield(g));
}

TEST(KPartialTree, Cases) {
  EXPECT_TRUE(KPartialTree(gen::Star(5), 5).IsFull());
  const PartitionTree d = KPartialTree(gen::TwoCliques(4, 1), 1);
  ASSERT_EQ(d.num_super(), 2);
  EXPECT_EQ(d.edges()[0].w, Weight(1));
  EXPECT_EQ(KPartialTree(gen::Complete(4), 2).num_super(), 1);
  EXPECT_THROW(KPartialTree(gen::Path(3), 0), std::invalid_argument);
}

TEST(KPartialTree, SeparatesExactlyLowPairs) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = gen::ErdosRenyi(14, 0.35, seed);
    const auto flows = oracle::AllPairs(g);
    for (std::int64_t k = 1; k <= 4; ++k) {
      const PartitionTree t = KPartialTree(g, k);
      ExpectEdgeValues(g, t);
      for (NodeId u = 0; u < 14; ++u) {
        for (NodeId v = u + 1; v < 14; ++v) {
          EXPECT_EQ(t.SuperOf(u) != t.SuperOf(v), flows[u][v] <= Weight(k));
        }
      }
      // Refining each super-node with classic trees recovers the full tree.
      std::map<int, PartitionTree> subs;
      for (int i = 0; i < t.num_super(); ++i) {
        if (t.Members(i).size() > 1) subs[i] = ClassicGomoryHu(BuildAuxiliaryGraph(g, t, i).graph);
      }
      ExpectOracleEqual(g, Assemble(g, t, subs));
    }
  }
}

TEST(Assemble, SingleSuperNode) {
  const Graph g = gen::Complete(4);
  std::map<int, PartitionTree> subs{{0, ClassicGomoryHu(g)}};
  EXPECT_EQ(TreeToString(Assemble(g, PartitionTree(4), subs)), TreeToString(subs.at(0)));
}

TEST(Assemble, DumbbellAndPath) {
  const Graph d = gen::TwoCliques(4, 1);
  const PartitionTree partial(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}, {{0, 1, Weight(1)}});
  std::map<int, PartitionTree> subs;
  for (int i = 0; i < 2; ++i) subs[i] = ClassicGomoryHu(BuildAuxiliaryGraph(d, partial, i).graph);
  ExpectOracleEqual(d, Assemble(d, partial, subs));

  const Graph p = gen::Path(6);
  const PartitionTree pp(6, {{0, 1, 2}, {3, 4, 5}}, {{0, 1, Weight(1)}});
  std::map<int, PartitionTree> psubs;
  for (int i = 0; i < 2; ++i) psubs[i] = ClassicGomoryHu(BuildAuxiliaryGraph(p, pp, i).graph);
  const PartitionTree full = Assemble(p, pp, psubs);
  ExpectOracleEqual(p, full);
  EXPECT_THROW(Assemble(p, pp, {}), std::invalid_argument);
}

TEST(TreeQuery, Cases) {
  const PartitionTree star = ClassicGomoryHu(gen::Complete(4));
  EXPECT_EQ(TreeQuery(star, 1, 2).value, Weight(3));
  const PartitionTree path = ClassicGomoryHu(gen::Path(3));
  const TreeQueryResult q = TreeQuery(path, 0, 2);
  EXPECT_EQ(q.value, Weight(1));
  EXPECT_TRUE(q.side.Contains(0));
  EXPECT_FALSE(q.side.Contains(2));
  EXPECT_THROW(TreeQuery(PartitionTree(3), 0, 1), std::invalid_argument);
}

TEST(NoncrossingTree, Cases) {
  const Graph g = gen::Path(4);
  auto cut = [&](std::vector<char> side, NodeId t) {
    CutSide c;
    c.side = side;
    c.value = CutValue(g, side);
    c.s = 0;
    c.t = t;
    return c;
  };
  EXPECT_EQ(NoncrossingTree(g, 0, {cut({0, 0, 0, 1}, 3)}).num_super(), 2);
  const PartitionTree chain =
      NoncrossingTree(g, 0, {cut({0, 1, 1, 1}, 1), cut({0, 0, 1, 1}, 2), cut({0, 0, 0, 1}, 3)});
  EXPECT_TRUE(chain.IsFull());
  ExpectOracleEqual(g, chain);
  const Graph s = gen::Star(3);
  std::vector<CutSide> leaves;
  for (NodeId v = 1; v <= 3; ++v) {
    CutSide c;
    c.side.assign(4, 0);
    c.side[v] = 1;
    c.value = Weight(1);
    c.t = v;
    leaves.push_back(c);
  }
  ExpectOracleEqual(s, NoncrossingTree(s, 0, leaves));
  EXPECT_THROW(NoncrossingTree(g, 0, {cut({0, 1, 1, 0}, 1), cut({0, 0, 1, 1}, 3)}),
               std::invalid_argument);
}

}  // namespace
}  // namespace ght
