#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cdo/orient.hpp"

namespace cdo {

// Single source distances over the directed edges; reverse follows arcs backwards.
std::vector<Length> directed_distances(const Graph& g, const Orientation& o, NodeId s,
                                       bool reverse = false);

// dist(z, v) + dist(v, z). Throws Unreachable when either side is missing.
Length directed_cycle_through(const Graph& g, const Orientation& o, NodeId v);

Length cycle_diameter(const Graph& g);
Length directed_cycle_diameter(const Graph& g, const Orientation& o);

struct OracleOrientation {
  Length d_opt = kInfinity;
  Orientation witness;
  long long strongly_connected = 0;
};

OracleOrientation oracle_opt_orientation(const Graph& g, int max_edges = 16);

// Minimum closed walk with distinct edges through u and v, by enumeration of
// every simple u-v path paired with the shortest path avoiding its edges.
Length oracle_min_cycle(const Graph& g, NodeId u, NodeId v, int node_bound = 10);

struct Ratio {
  Length num = 0;
  Length den = 1;
  double value() const;
  void raise(Length n, Length d);  // keep the larger ratio
};

struct NodeBound {
  NodeId v = -1;
  Length star = 0;   // l(C*(v))
  Length after = 0;  // serving cycle after crossing removal
  Length final = 0;  // serving cycle after orientation
  Length walk = 0;   // dist(z, v) + dist(v, z)
};

struct CycleBound {
  int component = 0;
  int id = -1;
  Length length = 0;
  Length walk = 0;  // directed closed walk from z through U(S)
};

struct ReportOptions {
  int oracle_max_edges = 14;  // D_opt computed when |E| does not exceed this
};

struct BoundReport {
  int n = 0;
  int m = 0;
  bool rejected = false;
  std::string reason;
  std::vector<NodeBound> nodes;
  std::vector<CycleBound> cycles;
  Ratio r9, growth3, r27, r405, r15;
  Length d_g = 0;
  Length d_h = 0;
  std::optional<Length> d_opt;
  Ratio ratio1620;
  int unreachable = 0;
  int unset_edges = 0;  // edges of the family left undirected by the procedures
  int broken = 0;
  PropertyReport properties;
  int uncross_pairs = 0;
  int competitions = 0;
  int reassigned = 0;
  int violations = 0;  // bound checks that failed
  nlohmann::json orientation;

  bool ok() const { return !rejected && violations == 0 && unreachable == 0 && properties.total() == 0; }
};

BoundReport full_report(const Graph& g, const ReportOptions& opt = {});
nlohmann::json report_json(const BoundReport& r);

}  // namespace cdo
