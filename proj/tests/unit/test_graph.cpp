#include <gtest/gtest.h>

#include "ght/auxiliary_graph.hpp"
#include "ght/generators.hpp"
#include "ght/graph.hpp"
#include "oracle.hpp"

namespace ght {
namespace {

TEST(Graph, MergesParallelEdgesAndRejectsLoops) {
  const Graph g(3, {{0, 1}, {1, 0, 2}, {1, 2}});
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.Degree(1), Weight(4));
  EXPECT_FALSE(g.IsSimple());
  EXPECT_THROW(Graph(2, {{1, 1}}), std::invalid_argument);
}

TEST(Graph, CutValueAndComponents) {
  const Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_FALSE(g.IsConnected());
  EXPECT_EQ(CutValue(g, {1, 1, 0, 0, 0}), Weight(1));
  const auto label = ComponentLabels(g);
  EXPECT_EQ(label[0], label[2]);
  EXPECT_NE(label[0], label[3]);
}

TEST(AuxiliaryGraph, PathTreeContractsBothEnds) {
  const Graph g = gen::Path(5);
  const PartitionTree t(5, {{0, 1}, {2}, {3, 4}}, {{0, 1, Weight(1)}, {1, 2, Weight(1)}});
  const AuxiliaryGraph aux = BuildAuxiliaryGraph(g, t, 1);
  EXPECT_EQ(aux.graph.num_nodes(), 3);
  EXPECT_EQ(aux.num_original, 1);
  EXPECT_EQ(aux.graph.num_edges(), 2);
  int contracted = 0;
  for (NodeId v = 0; v < 3; ++v) contracted += aux.graph.IsContracted(v);
  EXPECT_EQ(contracted, 2);
}

TEST(AuxiliaryGraph, SingleSuperNodeIsIdentity) {
  const Graph g = gen::Complete(5);
  const AuxiliaryGraph aux = BuildAuxiliaryGraph(g, PartitionTree(5), 0);
  EXPECT_EQ(aux.graph.num_nodes(), 5);
  EXPECT_EQ(aux.graph.TotalMultiplicity(), 10);
}

TEST(AuxiliaryGraph, DumbbellContractsRightClique) {
  const Graph g = gen::TwoCliques(4, 1);
  const PartitionTree t(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}, {{0, 1, Weight(1)}});
  const AuxiliaryGraph aux = BuildAuxiliaryGraph(g, t, 0);
  ASSERT_EQ(aux.graph.num_nodes(), 5);
  EXPECT_TRUE(aux.graph.IsContracted(4));
  EXPECT_EQ(aux.graph.SizeG(4), 4);
  EXPECT_EQ(aux.graph.Degree(4), Weight(1));
  EXPECT_THROW(BuildAuxiliaryGraph(g, t, 5), std::out_of_range);
}

TEST(AuxiliaryGraph, PreservesConnectivityOfMembers) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = gen::ErdosRenyi(12, 0.4, seed);
    const auto flows = oracle::AllPairs(g);
    // Split off vertex sets along real minimum cuts with the classic step.
    PartitionTree t(12);
    for (NodeId v : {5, 9}) {
      const int i = t.SuperOf(0);
      if (t.SuperOf(v) != i) continue;
      const AuxiliaryGraph aux = BuildAuxiliaryGraph(g, t, i);
      const NodeId s = aux.root_to_local[0], x = aux.root_to_local[v];
      GhRefine(t, aux, MaxFlowMinCut(aux.graph, x, s), x, s);
    }
    for (int i = 0; i < t.num_super(); ++i) {
      const AuxiliaryGraph aux = BuildAuxiliaryGraph(g, t, i);
      for (NodeId a = 0; a < aux.num_original; ++a) {
        for (NodeId b = a + 1; b < aux.num_original; ++b) {
          EXPECT_EQ(oracle::MaxFlow(aux.graph, a, b),
                    flows[aux.local_to_root[a]][aux.local_to_root[b]]);
        }
      }
    }
  }
}

TEST(Subdivide, Triangle) {
  const Subdivision s = Subdivide(gen::Complete(3));
  EXPECT_EQ(s.graph.num_nodes(), 6);
  EXPECT_EQ(s.graph.num_edges(), 6);
  EXPECT_TRUE(s.graph.IsSimple());
}

TEST(Subdivide, ParallelEdgesGetDistinctMidpoints) {
  const Subdivision s = Subdivide(Graph(2, {{0, 1, 2}}));
  EXPECT_EQ(s.graph.num_nodes(), 4);
  EXPECT_EQ(s.graph.num_edges(), 4);
  EXPECT_NE(s.midpoint[0], s.midpoint[1]);
}

TEST(Subdivide, DoubledK4KeepsConnectivity) {
  std::vector<Edge> edges;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) edges.push_back({a, b, 2});
  }
  const Graph g(4, edges);
  const Subdivision s = Subdivide(g);
  EXPECT_EQ(s.graph.num_nodes(), 16);
  EXPECT_EQ(s.graph.num_edges(), 24);
  for (NodeId a = 0; a < 4; ++a) {
    for (NodeId b = a + 1; b < 4; ++b) {
      EXPECT_EQ(oracle::MaxFlow(s.graph, a, b), oracle::MaxFlow(g, a, b));
    }
  }
}

TEST(Subdivide, RandomMultigraphsKeepConnectivity) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = gen::RandomMultigraph(7, 0.5, 3, seed);
    const Subdivision s = Subdivide(g);
    EXPECT_TRUE(s.graph.IsSimple());
    for (NodeId a = 0; a < 7; ++a) {
      for (NodeId b = a + 1; b < 7; ++b) {
        EXPECT_EQ(oracle::MaxFlow(s.graph, a, b), oracle::MaxFlow(g, a, b));
      }
    }
  }
}

TEST(InducedWithSelfLoops, WholeGraphHasNoLoops) {
  const Graph g = gen::Complete(4);
  const InducedGraph h = InducedWithSelfLoops(g, {0, 1, 2, 3});
  for (NodeId v = 0; v < 4; ++v) EXPECT_EQ(h.graph.SelfLoops(v), 0);
  EXPECT_EQ(h.graph.num_edges(), 6);
}

TEST(InducedWithSelfLoops, TriangleOfK4KeepsDegrees) {
  const Graph g = gen::Complete(4);
  const InducedGraph h = InducedWithSelfLoops(g, {0, 1, 2});
  for (NodeId v = 0; v < 3; ++v) {
    EXPECT_EQ(h.graph.SelfLoops(v), 1);
    EXPECT_EQ(h.graph.Degree(v), Weight(3));
  }
}

TEST(InducedWithSelfLoops, SingleNodeBecomesAllLoops) {
  const Graph g = gen::Star(4);
  const InducedGraph h = InducedWithSelfLoops(g, {0});
  EXPECT_EQ(h.graph.num_edges(), 0);
  EXPECT_EQ(h.graph.SelfLoops(0), 4);
  EXPECT_EQ(h.graph.Degree(0), Weight(4));
  EXPECT_THROW(InducedWithSelfLoops(g, {}), std::invalid_argument);
}

}  // namespace
}  // namespace ght
