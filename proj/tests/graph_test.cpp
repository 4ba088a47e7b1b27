#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "common.hpp"

using namespace cdo;
using cdo::test::make_graph;

TEST(Validate, TriangleIsValid) {
  Graph g = make_graph("z a 1 a b 1 b z 1");
  ValidationReport r = validate_graph(g);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.bridges.empty());
}

TEST(Validate, PathHasBridges) {
  Graph g = make_graph("z a 1 a b 1");
  ValidationReport r = validate_graph(g);
  EXPECT_FALSE(r.two_edge_connected);
  EXPECT_EQ(r.bridges.size(), 2u);
  try {
    require_valid(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotTwoEdgeConnected);
  }
}

TEST(Validate, K5FailsEulerCondition) {
  Graph g = make_graph("z a 1 z b 1 z c 1 z d 1 a b 1 a c 1 a d 1 b c 1 b d 1 c d 1");
  ValidationReport r = validate_graph(g);
  EXPECT_TRUE(r.two_edge_connected);
  EXPECT_FALSE(r.euler_ok);
}

TEST(Validate, NegativeLengthAndSelfLoop) {
  Graph neg = make_graph("z a 1 a b -1 b z 1");
  EXPECT_FALSE(validate_graph(neg).nonnegative);
  Graph loop = make_graph("z a 1 a b 1 b z 1 a a 1");
  EXPECT_FALSE(validate_graph(loop).no_self_loops);
}

TEST(ShortestPath, PrefersDirectEdge) {
  Graph g = make_graph("z a 1 a b 1 b z 1");
  Path p = shortest_path(g, g.at("a"), g.at("b"));
  EXPECT_EQ(p.length, 1);
  EXPECT_EQ(p.edges.size(), 1u);
}

TEST(ShortestPath, SameNodeIsEmpty) {
  Graph g = make_graph("z a 1 a b 1 b z 1");
  Path p = shortest_path(g, g.at("a"), g.at("a"));
  EXPECT_EQ(p.length, 0);
  EXPECT_TRUE(p.edges.empty());
}

TEST(ShortestPath, TieGoesToColexSmallerRoute) {
  // z-a-b (edges 0,1) and z-c-b (edges 2,3) are both of length 2.
  Graph g = make_graph("z a 1 a b 1 z c 1 c b 1");
  Path p = shortest_path(g, g.at("z"), g.at("b"));
  EXPECT_EQ(p.edge_set(), (EdgeSet{0, 1}));
  EXPECT_LT(compare_colex({0, 1}, {2, 3}), 0);
}

TEST(ShortestPath, NoLongerThanAnySimplePath) {
  for (const Graph& g : cdo::test::small_graphs(25, 4, 8)) {
    for (NodeId a = 0; a < g.node_count(); ++a)
      for (NodeId b = 0; b < g.node_count(); ++b) {
        Length best = kInfinity;
        std::vector<bool> seen(g.node_count());
        std::function<void(NodeId, Length)> dfs = [&](NodeId v, Length d) {
          if (v == b) {
            best = std::min(best, d);
            return;
          }
          seen[v] = true;
          for (EdgeId e : g.incident(v)) {
            NodeId w = g.edge(e).other(v);
            if (!seen[w]) dfs(w, d + g.edge(e).len);
          }
          seen[v] = false;
        };
        dfs(a, 0);
        ASSERT_EQ(shortest_path(g, a, b).length, best);
      }
  }
}

TEST(Subpath, InnerRange) {
  Graph g = make_graph("z a 1 a b 1 b c 1 c z 1");
  Path p = make_path(g, {g.at("z"), g.at("a"), g.at("b"), g.at("c")});
  Path s = subpath(g, p, g.at("a"), g.at("c"));
  EXPECT_EQ(s.nodes, (std::vector<NodeId>{g.at("a"), g.at("b"), g.at("c")}));
  EXPECT_EQ(s.length, 2);
  Path one = subpath(g, p, g.at("b"), g.at("b"));
  EXPECT_EQ(one.length, 0);
  EXPECT_EQ(one.nodes.size(), 1u);
  EXPECT_THROW(subpath(g, p, g.at("a"), g.add_node("x")), Error);
}

TEST(Subpath, LengthsAdd) {
  std::mt19937 rng(5);
  for (const Graph& g : cdo::test::small_graphs(20, 5, 8)) {
    Path p = shortest_path(g, 0, g.node_count() - 1);
    if (p.nodes.size() < 3) continue;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(p.nodes.size()) - 1);
    int i = pick(rng), j = pick(rng), k = pick(rng);
    std::array<int, 3> o{i, j, k};
    std::sort(o.begin(), o.end());
    NodeId a = p.nodes[o[0]], b = p.nodes[o[1]], c = p.nodes[o[2]];
    EXPECT_EQ(subpath(g, p, a, b).length + subpath(g, p, b, c).length, subpath(g, p, a, c).length);
  }
}

TEST(Subpath, ArcThroughRoot) {
  Graph g = make_graph("z a 1 a b 1 b c 1 c z 1");
  Path cyc = path_from_names(g, "zabcz");
  Path arc = cycle_arc_through(g, cyc, g.at("a"), g.at("c"), g.at("z"));
  EXPECT_NE(arc.find(g.at("z")), -1);
  EXPECT_EQ(arc.find(g.at("b")), -1);
  EXPECT_EQ(arc.length, 2);
}

TEST(PathDifference, LcaFigure) {
  FigureInstance fi = figure("lcafig");
  const Graph& g = fi.g;
  EdgeSet c0 = path_from_names(g, "zabcdz").edge_set();
  EdgeSet c4 = path_from_names(g, "zabcidz").edge_set();
  PathDifference d = path_difference(g, c0, c4);
  ASSERT_TRUE(d.is_path);
  EXPECT_EQ(d.path.length, 1);
  EXPECT_EQ(d.edges.size(), 1u);
  EXPECT_TRUE(path_difference(g, c0, c0).edges.empty());
}

TEST(PathDifference, DisjointLeavesFirst) {
  Graph g = make_graph("z a 1 a b 1 b z 1 z c 1 c d 1 d z 1");
  EdgeSet p = path_from_names(g, "zabz").edge_set();
  EdgeSet q = path_from_names(g, "zcdz").edge_set();
  PathDifference d = path_difference(g, p, q);
  EXPECT_EQ(d.edges, p);
  EXPECT_TRUE(d.is_cycle);
}

TEST(CycleKey, CanonicalUnderRotationAndReflection) {
  Graph g = make_graph("z a 1 a b 1 b c 1 c z 1 a c 1");
  Path c = path_from_names(g, "zabcz");
  auto key = canonical_edges(c);
  EXPECT_EQ(canonical_edges(path_from_names(g, "abcza")), key);
  EXPECT_EQ(canonical_edges(reversed(c)), key);
  EXPECT_EQ(canonical_edges(path_from_names(g, "czabc")), key);
}

TEST(CycleKey, StrictTotalOrder) {
  Graph g = make_graph("z a 1 a b 1 b z 1 z c 1 c b 1 a c 1");
  std::vector<CycleWalk> cs;
  for (const char* w : {"zabz", "zcbz", "zacz", "zabcz", "zacbz"}) {
    Path p = path_from_names(g, w);
    cs.push_back({p.edge_set(), p.length, p});
  }
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = 0; j < cs.size(); ++j) {
      if (i == j) {
        EXPECT_FALSE(cs[i] < cs[j]);
        continue;
      }
      EXPECT_NE(cs[i] < cs[j], cs[j] < cs[i]);
    }
}

TEST(Json, RoundTripIsByteIdentical) {
  for (const Graph& g : cdo::test::small_graphs(10, 4, 12)) {
    std::string first = graph_to_json(g).dump(2);
    Graph back = graph_from_json(json::parse(first));
    EXPECT_EQ(graph_to_json(back).dump(2), first);
  }
}

TEST(Json, RejectsBadInstances) {
  EXPECT_THROW(graph_from_json(json::parse(R"({"nodes":["z"],"root":"q","edges":[]})")), Error);
  EXPECT_THROW(graph_from_json(json::parse(R"({"nodes":["z","a"],"root":"z","edges":[{"id":3,"u":"z","v":"a","len":1}]})")),
               Error);
}

TEST(Generate, WheelFourSpokes) {
  GenSpec s;
  s.model = Model::Wheel;
  s.nodes = 5;
  Graph g = generate(s);
  EXPECT_EQ(g.node_count(), 5);
  EXPECT_EQ(g.edge_count(), 8);
  EXPECT_EQ(g.root(), 0);
  for (const Edge& e : g.edges()) EXPECT_EQ(e.len, 1);
}

TEST(Generate, DeterministicPerSeed) {
  GenSpec s;
  s.model = Model::Delaunay;
  s.nodes = 30;
  s.seed = 7;
  EXPECT_EQ(graph_to_json(generate(s)).dump(), graph_to_json(generate(s)).dump());
  s.seed = 8;
  GenSpec t = s;
  t.seed = 7;
  EXPECT_NE(graph_to_json(generate(s)).dump(), graph_to_json(generate(t)).dump());
}

TEST(Generate, CorpusIsValidAndPlanarCount) {
  for (int seed = 1; seed <= 100; ++seed) {
    Graph g = cdo::test::corpus_graph(seed, 3 + seed % 38);
    ValidationReport r = validate_graph(g);
    ASSERT_TRUE(r.ok()) << seed;
    ASSERT_TRUE(r.euler_ok) << seed;
    ASSERT_EQ(g.root(), 0);
  }
}

TEST(Generate, FigureLcafig) {
  GenSpec s;
  s.model = Model::Figure;
  s.figure = "lcafig";
  Graph g = generate(s);
  EXPECT_EQ(g.node_count(), figure("lcafig").g.node_count());
  for (const Edge& e : g.edges()) EXPECT_EQ(e.len, 1);
}

TEST(Generate, TooFewNodes) {
  GenSpec s;
  s.nodes = 2;
  EXPECT_THROW(generate(s), Error);
}
