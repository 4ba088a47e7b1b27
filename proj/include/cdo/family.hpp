#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cdo/cycles.hpp"
#include "cdo/graph.hpp"

namespace cdo {

enum class Weight { Light, Heavy, VeryHeavy };

const char* weight_name(Weight w);

struct ServingCycle {
  int id = -1;
  EdgeSet edges;
  Length length = 0;
  std::vector<NodeId> served;  // U(C), sorted
  bool alive = true;
  int origin = -1;  // cycle this one was rewritten from

  // Hereditary data, relative to the father's son path.
  int father = -1;
  int a = -1;
  int b = -1;
  bool loop = false;
  Path ps;     // P_s, from the father's position a to position b; closed for the root
  Path pf;     // P_f, slice [a, b] of the father's P_s
  EdgeSet pc;  // P_c
  int gen = -1;
  std::vector<int> sons;  // ordered by (a, b)
  std::vector<int> pool;  // cycles that still have to be placed below this one

  // Brother structure.
  int container = -1;  // closest containing brother
  int lc = -1;
  bool special = false;  // containment part of the special contained definition
  Weight weight = Weight::Light;

  EdgeSet sc;  // SC(C)
};

struct Block {
  int father = -1;
  int container = -1;
  int lc = 0;
  std::vector<int> members;
};

struct Family {
  const Graph* g = nullptr;
  std::vector<NodeId> nodes;  // nodes of the component other than the root
  EdgeSet span;               // union of the cycle edges
  std::vector<ServingCycle> cycles;
  int root = -1;
  std::map<NodeId, int> serving;
  std::map<NodeId, Length> original_length;
  std::map<NodeId, int> original_cycle;
  std::vector<Block> blocks;
  std::map<EdgeId, int> shortcut_stamp;  // processing step that created the shortcut edge
  int processed = 0;                     // number of processed cycles so far
  bool hierarchy = false;

  const ServingCycle& at(int id) const { return cycles[id]; }
  ServingCycle& at(int id) { return cycles[id]; }
  std::vector<int> alive_ids() const;
  const Graph& graph() const { return *g; }
};

// Where a cycle sits relative to a parent: C ∩ parent is the z side path
// around the parent son path positions [a, b].
struct Placement {
  int a = -1;
  int b = -1;
  bool loop = false;
  Path ps;
  Path pf;
  EdgeSet pc;
};

std::optional<Placement> try_place(const Graph& g, const ServingCycle& parent, const EdgeSet& d,
                                   std::string* why = nullptr);
Placement place(const Graph& g, const ServingCycle& parent, const EdgeSet& d);
Placement placement_of(const ServingCycle& c);

std::vector<Family> build_family(const Graph& g);

// Explicit family, for hand built configurations. Each entry is a closed walk
// written as node names; the minimum becomes the root.
Family family_from_cycles(const Graph& g, const std::vector<std::string>& walks);

// Groups candidates by key (a, b); each group is sorted by the cycle order so
// the first member is the son.
std::map<std::pair<int, int>, std::vector<int>> partition_sons(const Family& f, int parent,
                                                               const std::vector<int>& candidates);

using ProcessHook = std::function<void(Family&, int parent)>;

// Generation by generation son assignment. The hook runs on each parent
// before its sons are fixed.
void grow_hierarchy(Family& f, const ProcessHook& hook = nullptr);

void build_tree(Family& f);

// Brother structure among the given sons of one father: containment, lc,
// blocks, special flags. Used by build_tree and again during orientation.
std::vector<Block> brother_blocks(Family& f, int father, const std::vector<int>& sons);

bool is_ancestor(const Family& f, int a, int b);
int lowest_common_ancestor(const Family& f, int a, int b);

enum class CrossKind { Outer, Inner, Mixed };

struct CrossingRecord {
  int left = -1;
  int right = -1;
  NodeId x = -1;
  CrossKind kind = CrossKind::Mixed;
  bool nvh = false;
};

bool intervals_cross(int a1, int b1, int a2, int b2);

// Crossing record for two placements below parent, left one first. nullopt
// when the intervals do not cross; x stays -1 when no node off the parent is shared.
std::optional<CrossingRecord> crossing_of(const Family& f, int parent, int left, const Placement& pl,
                                          int right, const Placement& pr);

std::vector<CrossingRecord> detect_crossings(const Family& f, int parent);

Weight weight_of(Length pf, Length ps_father);

// Current undirected cycle of c, rebuilt from the son paths up the tree.
EdgeSet current_cycle(const Family& f, int c);

nlohmann::json family_dump(const Family& f);

}  // namespace cdo
