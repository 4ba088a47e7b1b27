#pragma once

#include <string>
#include <vector>

#include "cdo/graph.hpp"

namespace cdo {

// Small named instances drawn from hand built configurations. When cycles is
// non empty it lists the cycle family explicitly, root cycle first.
struct FigureInstance {
  Graph g;
  std::vector<std::string> cycles;
  std::vector<std::string> labels;
};

FigureInstance figure(const std::string& name);
std::vector<std::string> figure_names();

}  // namespace cdo
