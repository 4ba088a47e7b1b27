#pragma once

#include <vector>

#include "json.hpp"

#include "cdo/family.hpp"

namespace cdo {

enum class Dir : signed char { Unset = 0, UtoV = 1, VtoU = -1 };

struct Orientation {
  std::vector<Dir> dir;
  std::vector<int> setter;  // cycle id that last set the edge, -1 when unset or outside the family

  explicit Orientation(int edges = 0) : dir(edges, Dir::Unset), setter(edges, -1) {}
  bool set(EdgeId e) const { return dir[e] != Dir::Unset; }
  NodeId tail(const Graph& g, EdgeId e) const;
  NodeId head(const Graph& g, EdgeId e) const;
};

struct DirParams {
  int l1 = 0;
  int l2 = 0;
};

struct OrientStats {
  int competitions = 0;
  int overwritten = 0;  // competitions won by the cycle being oriented
  int reassigned = 0;   // father changes
  int contested = 0;    // edges taken over from a less preferred cycle elsewhere on P_s
};

// A block as it was directed: members in the father's direction.
struct DirectedBlock {
  int father = -1;
  int container = -1;
  std::vector<int> members;
};

struct OrientRun {
  Family family;              // hereditary tree after father reassignments
  std::vector<int> intended;  // +1 forwards, -1 backwards, 0 for the root and untouched cycles
  std::vector<int> travel;    // direction of P_s relative to its stored order
  std::vector<DirectedBlock> blocks;
  OrientStats stats;
};

// Directs every edge of the family. o covers the whole graph.
OrientRun main_orient(Family f, Orientation& o);

// Runs main_orient on every family, then directs the remaining edges from the
// lower endpoint id to the higher one.
struct GraphOrientation {
  Orientation o;
  std::vector<OrientRun> runs;
};
GraphOrientation orient_graph(const Graph& g, std::vector<Family> families);

struct CycleDiagnostics {
  int id = -1;
  Path i;  // I(C), directed
  NodeId t = -1;
  NodeId h = -1;
  Path jt;  // J_t(C), directed away from t
  Path jh;  // J_h(C), directed into h
  int cls = 0;  // measured class, +1 forwards
  bool broken = false;
};

struct PropertyReport {
  int heavy_backwards = 0;      // heavy cycles oriented backwards
  int leading_backwards = 0;    // blocks of more than two with both first or both last backwards
  int inner_disagree = 0;       // inner crossing cycle against its closest containing brother
  int outer_backwards = 0;      // outer crossing cycle oriented backwards
  int special_backwards = 0;    // special contained brother or its container backwards
  int total() const {
    return heavy_backwards + leading_backwards + inner_disagree + outer_backwards + special_backwards;
  }
};

struct Diagnostics {
  std::vector<CycleDiagnostics> cycles;  // indexed by cycle id, root included
  int broken = 0;
  PropertyReport properties;
};

Diagnostics extract_diagnostics(const Orientation& o, const OrientRun& run, bool throw_on_broken = false);

nlohmann::json orientation_json(const Orientation& o);
Orientation orientation_from_json(const Graph& g, const nlohmann::json& j);
nlohmann::json diagnostics_json(const Graph& g, const Diagnostics& d);

}  // namespace cdo
