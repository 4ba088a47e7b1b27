#include <gtest/gtest.h>

#include "common.hpp"

using namespace cdo;
using cdo::test::make_graph;

namespace {

Orientation cyclic(const Graph& g) {
  // Every edge from its first listed endpoint to the second.
  Orientation o(g.edge_count());
  for (const Edge& e : g.edges()) o.dir[e.id] = Dir::UtoV;
  return o;
}

}  // namespace

TEST(Directed, TriangleAndSquare) {
  Graph tri = make_graph("z a 1 a b 1 b z 1");
  Orientation o = cyclic(tri);
  for (NodeId v = 1; v < 3; ++v) EXPECT_EQ(directed_cycle_through(tri, o, v), 3);
  EXPECT_EQ(directed_cycle_diameter(tri, o), 3);

  Graph sq = make_graph("z a 1 a b 1 b c 1 c z 1");
  EXPECT_EQ(directed_cycle_diameter(sq, cyclic(sq)), 4);
}

TEST(Directed, UnreachableAndNotStrong) {
  Graph g = make_graph("z a 1 a b 1 b z 1");
  Orientation o = cyclic(g);
  o.dir[0] = Dir::VtoU;
  try {
    directed_cycle_through(g, o, g.at("a"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unreachable);
  }
  try {
    directed_cycle_diameter(g, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotStronglyConnected);
  }
}

TEST(Directed, DiameterMatchesFloyd) {
  for (const Graph& g : cdo::test::small_graphs(30, 4, 9)) {
    GraphOrientation go = orient_graph(g, [&] {
      std::vector<Family> v;
      for (Family& f : build_family(g)) v.push_back(cancel_crossings(std::move(f)));
      return v;
    }());
    EXPECT_EQ(directed_cycle_diameter(g, go.o), cdo::test::brute_directed_diameter(g, go.o));
  }
}

TEST(CycleDiameter, SmallGraphs) {
  EXPECT_EQ(cycle_diameter(make_graph("z a 1 a b 1 b z 1")), 3);
  EXPECT_EQ(cycle_diameter(figure("k4").g), 3);
  EXPECT_EQ(cycle_diameter(make_graph("z a 1 a b 1 b c 1 c z 1")), 4);
}

TEST(CycleDiameter, MatchesSubsetEnumeration) {
  for (const Graph& g : cdo::test::small_graphs(20, 4, 7)) {
    Length want = 0;
    for (NodeId u = 0; u < g.node_count(); ++u)
      for (NodeId v = u + 1; v < g.node_count(); ++v) want = std::max(want, cdo::test::brute_min_cycle(g, u, v));
    EXPECT_EQ(cycle_diameter(g), want);
  }
}

TEST(Oracle, TriangleSquareK4) {
  OracleOrientation t = oracle_opt_orientation(make_graph("z a 1 a b 1 b z 1"));
  EXPECT_EQ(t.d_opt, 3);
  EXPECT_EQ(t.strongly_connected, 1);  // edge 0 is fixed, leaving one of the two cyclic orientations
  EXPECT_EQ(oracle_opt_orientation(make_graph("z a 1 a b 1 b c 1 c z 1")).d_opt, 4);

  Graph k4 = figure("k4").g;
  OracleOrientation o = oracle_opt_orientation(k4);
  EXPECT_EQ(o.d_opt, cdo::test::brute_opt(k4));
  EXPECT_EQ(cdo::test::brute_directed_diameter(k4, o.witness), o.d_opt);
}

TEST(Oracle, MatchesIndependentEnumeration) {
  for (const Graph& g : cdo::test::small_graphs(25, 4, 6)) {
    if (g.edge_count() > 12) continue;
    OracleOrientation o = oracle_opt_orientation(g, 12);
    EXPECT_EQ(o.d_opt, cdo::test::brute_opt(g));
    EXPECT_EQ(cdo::test::brute_directed_diameter(g, o.witness), o.d_opt);
  }
}

TEST(Oracle, TooLarge) {
  Graph g = cdo::test::corpus_graph(1, 30);
  try {
    oracle_opt_orientation(g, 16);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  EXPECT_THROW(oracle_min_cycle(g, 0, 1, 10), Error);
}

TEST(Oracle, MinCycleAgreesWithSubsets) {
  Graph sq = make_graph("z a 2 a b 2 b c 2 c z 2 z b 3");
  for (NodeId u = 0; u < sq.node_count(); ++u)
    for (NodeId v = u + 1; v < sq.node_count(); ++v) {
      EXPECT_EQ(oracle_min_cycle(sq, u, v), cdo::test::brute_min_cycle(sq, u, v));
      EXPECT_EQ(min_cycle_pair_length(sq, u, v), oracle_min_cycle(sq, u, v));
    }
  EXPECT_EQ(oracle_min_cycle(figure("k4").g, 1, 2), 3);
}

TEST(Report, TriangleAllOnes) {
  BoundReport r = full_report(make_graph("z a 1 a b 1 b z 1"));
  ASSERT_FALSE(r.rejected);
  EXPECT_TRUE(r.ok());
  for (const Ratio* q : {&r.r9, &r.r27, &r.r405}) EXPECT_DOUBLE_EQ(q->value(), 1.0);
  ASSERT_TRUE(r.d_opt);
  EXPECT_EQ(*r.d_opt, 3);
  EXPECT_DOUBLE_EQ(r.ratio1620.value(), 1.0);
}

TEST(Report, EightEdgeInstanceHasOptimum) {
  Graph g = make_graph("z a 1 a b 2 b c 1 c z 2 z b 1 a d 3 d c 1 b d 2");
  ASSERT_EQ(g.edge_count(), 8);
  BoundReport r = full_report(g);
  ASSERT_TRUE(r.d_opt);
  EXPECT_EQ(*r.d_opt, cdo::test::brute_opt(g));
  EXPECT_TRUE(ratio_within(r.d_h, *r.d_opt, 1620));
  EXPECT_EQ(r.violations, 0);
}

TEST(Report, DeterministicBytes) {
  for (int seed = 1; seed <= 10; ++seed) {
    Graph g = cdo::test::corpus_graph(seed, 25);
    EXPECT_EQ(report_json(full_report(g)).dump(), report_json(full_report(g)).dump());
  }
}

TEST(Report, ChainOfBounds) {
  for (int seed = 1; seed <= 80; ++seed) {
    Graph g = cdo::test::corpus_graph(seed, 8 + seed % 33);
    BoundReport r = full_report(g);
    if (r.rejected) continue;
    for (const NodeBound& nb : r.nodes) {
      EXPECT_LE(nb.star, nb.after) << seed;
      EXPECT_TRUE(ratio_within(nb.after, nb.star, 9)) << seed;
      EXPECT_TRUE(ratio_within(nb.final, nb.after, 3)) << seed;
      ASSERT_LT(nb.walk, kInfinity) << seed;
      EXPECT_TRUE(ratio_within(nb.walk, nb.star, 405)) << seed;
      EXPECT_LE(nb.star, r.d_g) << seed;
    }
    for (const CycleBound& cb : r.cycles) EXPECT_TRUE(ratio_within(cb.walk, cb.length, 15)) << seed;
  }
}

TEST(Ratio, KeepsLarger) {
  Ratio q;
  q.raise(3, 2);
  q.raise(4, 3);
  EXPECT_EQ(q.num, 3);
  EXPECT_EQ(q.den, 2);
  q.raise(0, 0);
  EXPECT_DOUBLE_EQ(q.value(), 1.5);
}
