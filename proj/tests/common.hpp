#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "cdo/figures.hpp"
#include "cdo/io.hpp"
#include "cdo/uncross.hpp"
#include "cdo/verify.hpp"

namespace cdo::test {

// "u v len" triples; nodes appear in order of first mention, z is the root.
inline Graph make_graph(const std::string& spec, Length denominator = 1) {
  Graph g;
  g.set_denominator(denominator);
  g.add_node("z");
  std::istringstream in(spec);
  std::string u, v;
  Length len;
  while (in >> u >> v >> len) {
    if (g.find(u) < 0) g.add_node(u);
    if (g.find(v) < 0) g.add_node(v);
    g.add_edge(g.at(u), g.at(v), len);
  }
  g.set_root(g.at("z"));
  return g;
}

// Family id of a figure cycle given by its label.
inline int id_of(const Family& f, const FigureInstance& fi, const std::string& label) {
  for (size_t i = 0; i < fi.labels.size(); ++i)
    if (fi.labels[i] == label) {
      EdgeSet es = path_from_names(fi.g, fi.cycles[i]).edge_set();
      for (const auto& c : f.cycles)
        if (c.edges == es) return c.id;
    }
  return -1;
}

inline Family figure_tree(const FigureInstance& fi) {
  Family f = fi.cycles.empty() ? build_family(fi.g).front() : family_from_cycles(fi.g, fi.cycles);
  grow_hierarchy(f);
  build_tree(f);
  return f;
}

inline Graph corpus_graph(int seed, int nodes) {
  static const std::pair<Model, Length> models[] = {
      {Model::Delaunay, 1000}, {Model::Delaunay, 1}, {Model::Grid, 1}, {Model::Grid, 1000}, {Model::Wheel, 100}};
  GenSpec s;
  s.model = models[seed % 5].first;
  s.max_len = models[seed % 5].second;
  s.seed = static_cast<std::uint64_t>(seed);
  s.nodes = nodes;
  return generate(s);
}

inline std::vector<Graph> small_graphs(int count, int lo = 4, int hi = 8) {
  std::vector<Graph> out;
  for (int seed = 1; seed <= count; ++seed) out.push_back(corpus_graph(seed, lo + seed % (hi - lo + 1)));
  return out;
}

// Minimum weight connected even subgraph containing u and v, by subset
// enumeration. Such a subgraph is exactly a closed walk with distinct edges.
inline Length brute_min_cycle(const Graph& g, NodeId u, NodeId v) {
  const int m = g.edge_count();
  Length best = kInfinity;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> deg(g.node_count(), 0);
    Length len = 0;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) {
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
        len += g.edge(e).len;
      }
    if (len >= best || deg[u] == 0 || deg[v] == 0) continue;
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d % 2; })) continue;
    std::vector<int> comp(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) comp[i] = i;
    auto find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) comp[find(g.edge(e).u)] = find(g.edge(e).v);
    bool connected = true;
    for (int i = 0; i < g.node_count(); ++i)
      if (deg[i] && find(i) != find(u)) connected = false;
    if (connected) best = len;
  }
  return best;
}

// Floyd over the arcs of o, then max over ordered pairs of d(a,b) + d(b,a).
inline Length brute_directed_diameter(const Graph& g, const Orientation& o) {
  const int n = g.node_count();
  std::vector<std::vector<Length>> d(n, std::vector<Length>(n, kInfinity));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) {
    if (!o.set(e.id)) continue;
    NodeId a = o.tail(g, e.id), b = o.head(g, e.id);
    d[a][b] = std::min(d[a][b], e.len);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] < kInfinity && d[k][j] < kInfinity) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  Length best = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (d[i][j] >= kInfinity || d[j][i] >= kInfinity) return kInfinity;
      best = std::max(best, d[i][j] + d[j][i]);
    }
  return best;
}

inline Length brute_opt(const Graph& g) {
  const int m = g.edge_count();
  Length best = kInfinity;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Orientation o(m);
    for (int e = 0; e < m; ++e) o.dir[e] = (mask >> e & 1) ? Dir::UtoV : Dir::VtoU;
    best = std::min(best, brute_directed_diameter(g, o));
  }
  return best;
}

}  // namespace cdo::test
