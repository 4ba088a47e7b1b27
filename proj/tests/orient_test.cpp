#include <gtest/gtest.h>

#include "common.hpp"

using namespace cdo;
using cdo::test::id_of;
using cdo::test::make_graph;

namespace {

struct Oriented {
  FigureInstance fi;
  Orientation o;
  OrientRun run;
  Diagnostics d;
};

Oriented orient_figure(const std::string& name) {
  Oriented r{figure(name), Orientation(), OrientRun(), Diagnostics()};
  Family f0 = r.fi.cycles.empty() ? build_family(r.fi.g).front() : family_from_cycles(r.fi.g, r.fi.cycles);
  r.o = Orientation(r.fi.g.edge_count());
  r.run = main_orient(cancel_crossings(f0), r.o);
  r.d = extract_diagnostics(r.o, r.run);
  return r;
}

bool arc(const Graph& g, const Orientation& o, const char* a, const char* b) {
  for (EdgeId e : g.incident(g.at(a)))
    if (g.edge(e).other(g.at(a)) == g.at(b) && o.set(e) && o.tail(g, e) == g.at(a)) return true;
  return false;
}

bool directed_walk(const Graph& g, const Orientation& o, const std::string& names) {
  for (size_t i = 0; i + 1 < names.size(); ++i) {
    const char a[2] = {names[i], 0}, b[2] = {names[i + 1], 0};
    if (!arc(g, o, a, b)) return false;
  }
  return true;
}

}  // namespace

TEST(Orient, TriangleIsDirectedCycle) {
  Graph g = make_graph("z a 1 a b 1 b z 1");
  GraphOrientation go = orient_graph(g, {cancel_crossings(build_family(g).front())});
  for (EdgeId e = 0; e < 3; ++e) EXPECT_TRUE(go.o.set(e));
  for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(directed_cycle_through(g, go.o, v) % 3, 0);
  EXPECT_EQ(directed_cycle_through(g, go.o, 1), 3);
}

TEST(Orient, DeffigClasses) {
  Oriented r = orient_figure("deffig");
  const Family& f = r.run.family;
  int c2 = id_of(f, r.fi, "C2"), c9 = id_of(f, r.fi, "C9"), c1 = id_of(f, r.fi, "C1");
  EXPECT_EQ(r.d.cycles[c2].cls, 1);
  EXPECT_EQ(r.d.cycles[c9].cls, -1);
  EXPECT_EQ(r.d.cycles[c1].cls, 1);
  // U(C2) = [a,b,c,f,i,h] lies on one directed run of P_s(C2).
  std::string u;
  for (NodeId v : r.d.cycles[c2].i.nodes) u += r.fi.g.name(v);
  EXPECT_NE(u.find("abcfih"), std::string::npos) << u;
  EXPECT_EQ(r.d.properties.total(), 0);
}

TEST(Orient, BigexfigDirectedCycles) {
  Oriented r = orient_figure("bigexfig");
  const Family& f = r.run.family;
  EXPECT_EQ(r.d.cycles[id_of(f, r.fi, "C1")].cls, 1);
  EXPECT_EQ(r.d.cycles[id_of(f, r.fi, "C2")].cls, -1);
  EXPECT_TRUE(directed_walk(r.fi.g, r.o, "zajbcdefghiz"));
  for (const char* a : {"cn", "nm", "ml", "lk", "kj"}) {
    const char x[2] = {a[0], 0}, y[2] = {a[1], 0};
    EXPECT_TRUE(arc(r.fi.g, r.o, x, y)) << a;
  }
  // D_2 = z a b c n m l k j b c d e f g h i z, a closed walk once b-c is traversed twice.
  EXPECT_TRUE(directed_walk(r.fi.g, r.o, "zabcnmlkjbcdefghiz"));
}

TEST(Orient, InncrossfigArcs) {
  Oriented r = orient_figure("inncrossfig");
  for (const char* a : {"ka", "ax", "xb", "bh", "xc", "cl", "gd", "dx"}) {
    const char x[2] = {a[0], 0}, y[2] = {a[1], 0};
    EXPECT_TRUE(arc(r.fi.g, r.o, x, y)) << a;
  }
  EXPECT_EQ(r.d.properties.inner_disagree, 0);
}

TEST(Orient, FiguresSatisfyProperties) {
  for (const char* name : {"deffig", "lcafig", "intervalfig", "bigexfig", "inncrossfig", "crfig"}) {
    Oriented r = orient_figure(name);
    EXPECT_EQ(r.d.properties.total(), 0) << name;
    EXPECT_EQ(r.d.broken, 0) << name;
    for (int c : r.run.family.alive_ids())
      for (EdgeId e : current_cycle(r.run.family, c)) {
        EXPECT_TRUE(r.o.set(e)) << name;
        EXPECT_GE(r.o.setter[e], 0) << name;
      }
  }
}

TEST(Orient, DiagnosticsOfForwardCycle) {
  Graph g = make_graph("z a 1 a b 1 b z 1");
  Orientation o(3);
  OrientRun run = main_orient(cancel_crossings(build_family(g).front()), o);
  Diagnostics d = extract_diagnostics(o, run);
  const auto& c = d.cycles[run.family.root];
  EXPECT_FALSE(c.broken);
  EXPECT_TRUE(c.jt.edges.empty());
  EXPECT_TRUE(c.jh.edges.empty());
}

TEST(Orient, JsonRoundTrip) {
  Graph g = figure("k4").g;
  GraphOrientation go = orient_graph(g, {cancel_crossings(build_family(g).front())});
  json j = orientation_json(go.o);
  Orientation back = orientation_from_json(g, j);
  EXPECT_EQ(back.dir, go.o.dir);
  EXPECT_THROW(orientation_from_json(g, json::parse(R"([{"id":99,"dir":"uv"}])")), Error);
  EXPECT_THROW(orientation_from_json(g, json::parse(R"([{"id":0,"dir":"up"}])")), Error);
}

// Totality, strong connectivity and Properties 1, 3, 4, 5 over the corpus.
TEST(OrientProperties, Corpus) {
  int instances = 0, leading = 0;
  for (int seed = 1; seed <= 260; ++seed) {
    Graph g = cdo::test::corpus_graph(seed, 8 + seed % 33);
    std::vector<Family> after;
    try {
      for (Family& f : build_family(g)) after.push_back(cancel_crossings(std::move(f)));
      GraphOrientation go = orient_graph(g, after);
      ++instances;
      for (const Edge& e : g.edges()) ASSERT_TRUE(go.o.set(e.id)) << seed;
      for (const OrientRun& run : go.runs) {
        Diagnostics d = extract_diagnostics(go.o, run);
        EXPECT_EQ(d.properties.heavy_backwards, 0) << seed;
        EXPECT_EQ(d.properties.inner_disagree, 0) << seed;
        EXPECT_EQ(d.properties.outer_backwards, 0) << seed;
        EXPECT_EQ(d.properties.special_backwards, 0) << seed;
        leading += d.properties.leading_backwards;
        for (int c : run.family.alive_ids())
          for (EdgeId e : current_cycle(run.family, c)) ASSERT_GE(go.o.setter[e], 0) << seed;
      }
      for (NodeId v = 0; v < g.node_count(); ++v)
        EXPECT_LT(directed_cycle_through(g, go.o, v), kInfinity) << seed << " node " << v;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::UnsupportedInstance) << seed << " " << e.what();
    }
  }
  EXPECT_GE(instances, 250);
  // Property 2 is checked by the acceptance run, which reports the one known
  // block where the literal heavy-last branch hands DIRECT-TWO (-1,-1).
  EXPECT_LE(leading, 1);
}
