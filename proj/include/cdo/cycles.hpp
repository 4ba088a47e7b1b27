#pragma once

#include <optional>
#include <vector>

#include "cdo/graph.hpp"

namespace cdo {

struct CycleWalk {
  EdgeSet edges;
  Length length = 0;
  Path walk;  // closed, starts at the root
};

// Strict order: length first, then compare_colex on the edge sets.
bool operator<(const CycleWalk& a, const CycleWalk& b);

// Rotation and reflection invariant edge sequence of a closed walk.
std::vector<EdgeId> canonical_edges(const Path& closed);

// Minimum closed walk with distinct edges through a and b, as the union of two
// edge disjoint a-b paths of minimum total cost. Returns nullopt when a and b
// are separated by a bridge.
std::optional<CycleWalk> min_cycle_pair(const Graph& g, NodeId a, NodeId b);

// Same optimum length without the tie breaking, for bulk use.
Length min_cycle_pair_length(const Graph& g, NodeId a, NodeId b);

// The serving cycle of v: min_cycle_pair(v, root).
CycleWalk min_cycle_through(const Graph& g, NodeId v);

}  // namespace cdo
