#include <gtest/gtest.h>

#include <sstream>

#include "ght/generators.hpp"
#include "ght/gomory_hu.hpp"
#include "ght/graph_io.hpp"
#include "ght/tree_builders.hpp"
#include "ght/verify.hpp"

namespace ght {
namespace {

TEST(GraphIo, RoundTrip) {
  const Graph g = gen::RandomMultigraph(9, 0.5, 3, 4);
  std::stringstream a;
  WriteGraph(a, g);
  const Graph h = ReadGraph(a);
  std::stringstream b;
  WriteGraph(b, h);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(h.num_edges(), g.num_edges());
}

TEST(GraphIo, CommentsAndMultiplicity) {
  std::istringstream in("c hello\n# note\np 3 2\ne 1 2 3\ne 2 3\n");
  const Graph g = ReadGraph(in);
  EXPECT_EQ(g.num_nodes(), 3);
  EXPECT_EQ(g.Degree(1), Weight(4));
}

TEST(GraphIo, Errors) {
  for (const char* text : {"e 1 2\n", "p 2 1\ne 1 1\n", "p 2 1\ne 1 3\n", "p 2 2\ne 1 2\n",
                           "p 2 1\ne 1 2 x\n", "p 2 1\ne 1 2 1 9\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(ReadGraph(in), ParseError) << text;
  }
}

TEST(TreeIo, RoundTripAndValidation) {
  const PartitionTree t = ClassicGomoryHu(gen::ErdosRenyi(10, 0.5, 1));
  std::stringstream s(TreeToString(t));
  EXPECT_EQ(TreeToString(ReadTree(s)), TreeToString(t));
  std::istringstream cycle("t 3\ne 1 2 1.0\ne 2 3 1.0\ne 3 1 1.0\n");
  EXPECT_THROW(ReadTree(cycle), ParseError);
  std::istringstream short_tree("t 3\ne 1 2 1.0\n");
  EXPECT_THROW(ReadTree(short_tree), ParseError);
}

TEST(Verify, CorrectTreePasses) {
  const Graph g = gen::ErdosRenyi(14, 0.4, 2);
  const VerifyResult r = VerifyTreeFull(g, ClassicGomoryHu(g));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.pairs_checked, 14 * 13 / 2);
  EXPECT_TRUE(VerifyTreeSampled(g, Gusfield(g), 50, 3).ok);
}

TEST(Verify, CorruptedWeightIsReported) {
  const Graph g = gen::ErdosRenyi(12, 0.5, 3);
  const PartitionTree t = ClassicGomoryHu(g);
  std::vector<TreeEdge> edges = t.NodeEdges();
  edges[0].w += Weight(1);
  std::vector<std::vector<NodeId>> supers(12);
  for (NodeId v = 0; v < 12; ++v) supers[v] = {v};
  const PartitionTree bad(12, supers, edges);
  const VerifyResult r = VerifyTreeFull(g, bad);
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.mismatches.empty());
  const PairMismatch& m = r.mismatches[0];
  EXPECT_NE(m.flow, m.tree_value);
}

TEST(Verify, OracleLimit) {
  const Graph g = gen::Path(10);
  EXPECT_THROW(VerifyTreeFull(g, ClassicGomoryHu(g), 5), std::invalid_argument);
}

}  // namespace
}  // namespace ght
