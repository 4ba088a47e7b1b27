#include "cdo/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>

#include <boost/polygon/voronoi.hpp>

#include "cdo/figures.hpp"

namespace cdo {

Graph graph_from_json(const json& j) {
  Graph g;
  try {
    g.set_denominator(j.value("denominator", 1));
    if (g.denominator() <= 0) throw Error(ErrorCode::InputError, "denominator must be positive");
    for (const auto& n : j.at("nodes")) g.add_node(n.get<std::string>());
    g.set_root(g.at(j.at("root").get<std::string>()));
    std::vector<json> edges(j.at("edges").begin(), j.at("edges").end());
    std::sort(edges.begin(), edges.end(),
              [](const json& a, const json& b) { return a.at("id").get<int>() < b.at("id").get<int>(); });
    for (size_t i = 0; i < edges.size(); ++i) {
      const json& e = edges[i];
      if (e.at("id").get<int>() != static_cast<int>(i))
        throw Error(ErrorCode::InputError, "edge ids must be dense from 0");
      g.add_edge(g.at(e.at("u").get<std::string>()), g.at(e.at("v").get<std::string>()),
                 e.at("len").get<Length>());
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::InputError, std::string("malformed instance: ") + ex.what());
  }
  return g;
}

json graph_to_json(const Graph& g) {
  json j;
  j["denominator"] = g.denominator();
  json nodes = json::array();
  for (NodeId v = 0; v < g.node_count(); ++v) nodes.push_back(g.name(v));
  j["nodes"] = nodes;
  j["root"] = g.name(g.root());
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"id", e.id}, {"u", g.name(e.u)}, {"v", g.name(e.v)}, {"len", e.len}});
  j["edges"] = edges;
  return j;
}

Graph read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InputError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::InputError, std::string("bad json: ") + ex.what());
  }
  return graph_from_json(j);
}

void write_instance(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InputError, "cannot write " + path);
  out << graph_to_json(g).dump(2) << "\n";
}

Model parse_model(const std::string& s) {
  if (s == "delaunay") return Model::Delaunay;
  if (s == "grid" || s == "grid-with-deletions") return Model::Grid;
  if (s == "wheel") return Model::Wheel;
  if (s == "figure" || s == "paper-figure") return Model::Figure;
  throw Error(ErrorCode::InputError, "unknown model " + s);
}

std::string model_name(Model m) {
  switch (m) {
    case Model::Delaunay: return "delaunay";
    case Model::Grid: return "grid";
    case Model::Wheel: return "wheel";
    case Model::Figure: return "figure";
  }
  return "?";
}

namespace {

using Rng = std::mt19937_64;

Length draw_length(Rng& rng, Length k) {
  if (k <= 1) return 1;
  return std::uniform_int_distribution<Length>(1, k)(rng);
}

Graph numbered(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_node(std::to_string(i));
  g.set_root(0);
  return g;
}

Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs, Rng& rng, Length k) {
  Graph g = numbered(n);
  for (auto [u, v] : pairs) g.add_edge(u, v, draw_length(rng, k));
  return g;
}

std::vector<std::pair<int, int>> delaunay_pairs(int n, Rng& rng) {
  using boost::polygon::voronoi_diagram;
  std::uniform_int_distribution<int> coord(0, 1 << 20);
  std::set<std::pair<int, int>> seen;
  std::vector<boost::polygon::point_data<int>> pts;
  while (static_cast<int>(pts.size()) < n) {
    int x = coord(rng), y = coord(rng);
    if (seen.insert({x, y}).second) pts.emplace_back(x, y);
  }
  voronoi_diagram<double> vd;
  boost::polygon::construct_voronoi(pts.begin(), pts.end(), &vd);
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : vd.edges()) {
    if (!e.is_primary()) continue;
    int a = static_cast<int>(e.cell()->source_index());
    int b = static_cast<int>(e.twin()->cell()->source_index());
    if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
  }
  return {pairs.begin(), pairs.end()};
}

Graph make_delaunay(const GenSpec& spec, Rng& rng) {
  auto pairs = delaunay_pairs(spec.nodes, rng);
  return from_pairs(spec.nodes, pairs, rng, spec.max_len);
}

Graph make_grid(const GenSpec& spec, Rng& rng) {
  int rows = std::max(2, static_cast<int>(std::floor(std::sqrt(static_cast<double>(spec.nodes)))));
  int cols = std::max(2, (spec.nodes + rows - 1) / rows);
  std::vector<std::pair<int, int>> pairs;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int id = r * cols + c;
      if (c + 1 < cols) pairs.push_back({id, id + 1});
      if (r + 1 < rows) pairs.push_back({id, id + cols});
    }
  std::vector<int> order(pairs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> keep(pairs.size(), true);
  int budget = static_cast<int>(pairs.size()) / 5;
  int n = rows * cols;
  for (int idx : order) {
    if (budget == 0) break;
    keep[idx] = false;
    std::vector<std::pair<int, int>> trial;
    for (size_t i = 0; i < pairs.size(); ++i)
      if (keep[i]) trial.push_back(pairs[i]);
    Rng dummy(0);
    if (validate_graph(from_pairs(n, trial, dummy, 1)).ok()) {
      --budget;
    } else {
      keep[idx] = true;
    }
  }
  std::vector<std::pair<int, int>> kept;
  for (size_t i = 0; i < pairs.size(); ++i)
    if (keep[i]) kept.push_back(pairs[i]);
  return from_pairs(n, kept, rng, spec.max_len);
}

Graph make_wheel(const GenSpec& spec, Rng& rng) {
  int n = spec.nodes;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.push_back({0, i});
  for (int i = 1; i < n; ++i) pairs.push_back({i, i + 1 < n ? i + 1 : 1});
  return from_pairs(n, pairs, rng, spec.max_len);
}

}  // namespace

Graph generate(const GenSpec& spec) {
  if (spec.model == Model::Figure) return figure(spec.figure).g;
  if (spec.nodes < 3) throw Error(ErrorCode::InputError, "node count must be at least 3");
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < 10; ++attempt) {
    Graph g;
    switch (spec.model) {
      case Model::Delaunay: g = make_delaunay(spec, rng); break;
      case Model::Grid: g = make_grid(spec, rng); break;
      case Model::Wheel: g = make_wheel(spec, rng); break;
      case Model::Figure: break;
    }
    if (validate_graph(g).ok()) return g;
    rng.seed(spec.seed * 0x9E3779B97F4A7C15ULL + attempt + 1);
  }
  throw Error(ErrorCode::GenerationFailed, "could not generate a 2-edge-connected instance");
}

}  // namespace cdo
