#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "cdo/graph.hpp"

namespace cdo {

using json = nlohmann::json;

Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);
Graph read_instance(const std::string& path);
void write_instance(const Graph& g, const std::string& path);

enum class Model { Delaunay, Grid, Wheel, Figure };

struct GenSpec {
  Model model = Model::Delaunay;
  int nodes = 20;
  std::uint64_t seed = 1;
  Length max_len = 1;  // 1 means unit lengths, K means uniform in [1,K]
  std::string figure;  // name of a built in figure instance
};

Model parse_model(const std::string& s);
std::string model_name(Model m);

Graph generate(const GenSpec& spec);

}  // namespace cdo
