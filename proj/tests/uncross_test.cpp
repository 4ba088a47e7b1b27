#include <gtest/gtest.h>

#include <sstream>

#include "common.hpp"

using namespace cdo;

namespace {

std::string walk_names(const Graph& g, const EdgeSet& es) {
  auto w = euler_walk(g, es, g.root());
  std::string s;
  if (w)
    for (NodeId v : w->nodes) s += g.name(v);
  return s;
}

}  // namespace

TEST(Uncross, NoCrossingLeavesFamilyAlone) {
  FigureInstance fi = figure("lcafig");
  Family f0 = family_from_cycles(fi.g, fi.cycles);
  UncrossStats st;
  Family f = cancel_crossings(f0, {}, &st);
  EXPECT_EQ(st.pairs, 0);
  for (int c : f.alive_ids()) {
    EXPECT_TRUE(f.at(c).sc.empty());
    EXPECT_EQ(current_cycle(f, c), f0.at(c).edges);
  }
  NineReport r = assert_nine_bound(f);
  EXPECT_EQ(r.violations, 0);
  EXPECT_EQ(r.worst_num, r.worst_den);
}

TEST(Uncross, CrfigShortcut) {
  FigureInstance fi = figure("crfig");
  const Graph& g = fi.g;
  Family f0 = build_family(g).front();
  std::ostringstream trace;
  UncrossStats st;
  Family f = cancel_crossings(f0, {&trace}, &st);
  EXPECT_EQ(st.pairs, 1);

  const NodeId p = g.at("p");
  const int id = f.serving.at(p);
  EdgeSet now = current_cycle(f, id);
  EXPECT_EQ(walk_names(g, now), "zkpxglhz");
  // The spliced shortcut is the single edge x-g.
  ASSERT_EQ(f.at(id).sc.size(), 1u);
  const Edge& e = g.edge(f.at(id).sc.front());
  EXPECT_EQ(std::set<NodeId>({e.u, e.v}), std::set<NodeId>({g.at("x"), g.at("g")}));
  EXPECT_EQ(shortest_path(g, e.u, e.v).length, e.len);

  json line = json::parse(trace.str().substr(0, trace.str().find('\n')));
  EXPECT_EQ(line["sp"], json::array({"x", "g"}));

  NineReport r = assert_nine_bound(f);
  EXPECT_EQ(r.violations, 0);
  EXPECT_EQ(f.original_length.at(p), 8);
  EXPECT_EQ(set_length(g, now), 9);
  EXPECT_TRUE(ratio_within(set_length(g, now), f.original_length.at(p), 9));
}

TEST(Uncross, RatioHelpers) {
  EXPECT_TRUE(ratio_within(0, 0, 9));
  EXPECT_TRUE(ratio_within(9, 1, 9));
  EXPECT_FALSE(ratio_within(10, 1, 9));
  EXPECT_TRUE(ratio_greater(3, 2, 4, 3));
  EXPECT_FALSE(ratio_greater(4, 3, 3, 2));
}

// Over the corpus: nine-bound, no remaining n.v.h. pair, one cycle per
// original cycle's nodes, and shortcut edges on shortest paths.
TEST(UncrossProperties, Corpus) {
  int pairs = 0;
  for (int seed = 1; seed <= 200; ++seed) {
    Graph g = cdo::test::corpus_graph(seed, 8 + seed % 33);
    for (Family f0 : build_family(g)) {
      UncrossStats st;
      Family f;
      try {
        f = cancel_crossings(f0, {}, &st);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::UnsupportedInstance) << seed << " " << e.what();
        continue;
      }
      pairs += st.pairs;
      EXPECT_EQ(assert_nine_bound(f, false).violations, 0) << seed;
      for (int c : f.alive_ids()) EXPECT_TRUE(nvh_pairs(f, c).empty()) << seed;

      std::map<int, std::set<int>> groups;
      for (auto [v, orig] : f.original_cycle) groups[orig].insert(f.serving.at(v));
      for (auto& [orig, now] : groups) EXPECT_EQ(now.size(), 1u) << seed;

      for (int c : f.alive_ids()) {
        EdgeSet cyc = current_cycle(f, c);
        auto w = euler_walk(g, cyc, g.root());
        ASSERT_TRUE(w) << seed;
        for (NodeId v : f.at(c).served) EXPECT_NE(w->find(v), -1) << seed;
      }
    }
  }
  EXPECT_GT(pairs, 0);
}
