#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cdo/error.hpp"

namespace cdo {

// Lengths are integers scaled by the instance denominator.
using Length = std::int64_t;
using NodeId = int;
using EdgeId = int;

constexpr Length kInfinity = INT64_MAX / 4;

struct Edge {
  EdgeId id;
  NodeId u;
  NodeId v;
  Length len;

  NodeId other(NodeId x) const { return x == u ? v : u; }
};

class Graph {
 public:
  NodeId add_node(std::string name);
  EdgeId add_edge(NodeId u, NodeId v, Length len);

  int node_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeId>& incident(NodeId v) const { return adj_[v]; }
  const std::string& name(NodeId v) const { return names_[v]; }
  NodeId find(std::string_view name) const;
  NodeId at(std::string_view name) const;

  NodeId root() const { return root_; }
  void set_root(NodeId z) { root_ = z; }
  Length denominator() const { return denominator_; }
  void set_denominator(Length d) { denominator_ = d; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adj_;
  NodeId root_ = 0;
  Length denominator_ = 1;
};

// Sorted, duplicate free.
using EdgeSet = std::vector<EdgeId>;

EdgeSet make_edge_set(std::vector<EdgeId> ids);
EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_minus(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_intersect(const EdgeSet& a, const EdgeSet& b);
bool set_contains(const EdgeSet& a, EdgeId e);
bool set_includes(const EdgeSet& big, const EdgeSet& small);
Length set_length(const Graph& g, const EdgeSet& s);

// Strict total order on edge sets of equal length: the set whose largest
// differing id is smaller comes first.
int compare_colex(const EdgeSet& a, const EdgeSet& b);
bool cycle_less(Length la, const EdgeSet& a, Length lb, const EdgeSet& b);

// nodes.size() == edges.size() + 1 unless the path is empty (no nodes).
struct Path {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
  Length length = 0;

  bool empty() const { return nodes.empty(); }
  bool closed() const { return !nodes.empty() && nodes.front() == nodes.back() && !edges.empty(); }
  NodeId front() const { return nodes.front(); }
  NodeId back() const { return nodes.back(); }
  int find(NodeId v) const;
  EdgeSet edge_set() const { return make_edge_set(edges); }
};

Path single_node(NodeId v);
Path reversed(const Path& p);
Path concat(const Path& a, const Path& b);
bool is_valid_path(const Graph& g, const Path& p);

// Contiguous piece of p between positions i <= j.
Path slice(const Graph& g, const Path& p, int i, int j);

struct ValidationReport {
  bool two_edge_connected = true;
  bool nonnegative = true;
  bool no_self_loops = true;
  bool root_ok = true;
  bool connected = true;
  bool euler_ok = true;  // |E| <= 3|V| - 6 on the simple reduction
  std::vector<EdgeId> bridges;
  std::vector<std::string> messages;

  bool ok() const {
    return two_edge_connected && nonnegative && no_self_loops && root_ok && connected;
  }
};

ValidationReport validate_graph(const Graph& g);
void require_valid(const Graph& g);

// Minimum length path, ties broken on the edge sets by compare_colex.
Path shortest_path(const Graph& g, NodeId a, NodeId b);

// Plain single source Dijkstra over all edges.
std::vector<Length> distances(const Graph& g, NodeId s);

Path subpath(const Graph& g, const Path& p, NodeId a, NodeId b);

// The a..b arc of a closed walk that contains the node z.
Path cycle_arc_through(const Graph& g, const Path& cycle, NodeId a, NodeId b, NodeId z);

struct PathDifference {
  EdgeSet edges;
  bool is_path = false;
  bool is_cycle = false;
  Path path;
};

PathDifference path_difference(const Graph& g, const EdgeSet& p, const EdgeSet& q);

// Orders an edge set as a simple path or simple cycle. start picks the first
// node when given.
std::optional<Path> edges_to_path(const Graph& g, const EdgeSet& s, NodeId start = -1);

// Closed walk through every edge of an Eulerian edge set, starting at start.
std::optional<Path> euler_walk(const Graph& g, const EdgeSet& s, NodeId start);

// Trail through every edge of s from start to finish, smallest edge first.
std::optional<Path> euler_trail(const Graph& g, const EdgeSet& s, NodeId start, NodeId finish);

Path make_path(const Graph& g, const std::vector<NodeId>& nodes);
Path path_from_names(const Graph& g, std::string_view spec);

}  // namespace cdo
