#include "cdo/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdo {

using boost::multiprecision::cpp_int;

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InputError: return "InputError";
    case ErrorCode::NotTwoEdgeConnected: return "NotTwoEdgeConnected";
    case ErrorCode::NegativeLength: return "NegativeLength";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::NodeNotOnPath: return "NodeNotOnPath";
    case ErrorCode::NoCycle: return "NoCycle";
    case ErrorCode::MalformedIntersection: return "MalformedIntersection";
    case ErrorCode::AncestorRelation: return "AncestorRelation";
    case ErrorCode::NoCrossNode: return "NoCrossNode";
    case ErrorCode::EmptyCandidate: return "EmptyCandidate";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::UnsupportedInstance: return "UnsupportedInstance";
    case ErrorCode::LedgerMiss: return "LedgerMiss";
    case ErrorCode::MissingContainingBrother: return "MissingContainingBrother";
    case ErrorCode::BrokenI: return "BrokenI";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

NodeId Graph::add_node(std::string name) {
  auto [it, fresh] = index_.emplace(name, node_count());
  if (!fresh) throw Error(ErrorCode::InputError, "duplicate node " + name);
  names_.push_back(std::move(name));
  adj_.emplace_back();
  return it->second;
}

EdgeId Graph::add_edge(NodeId u, NodeId v, Length len) {
  if (u < 0 || v < 0 || u >= node_count() || v >= node_count())
    throw Error(ErrorCode::InputError, "edge endpoint out of range");
  EdgeId id = edge_count();
  edges_.push_back({id, u, v, len});
  adj_[u].push_back(id);
  if (v != u) adj_[v].push_back(id);
  return id;
}

NodeId Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

NodeId Graph::at(std::string_view name) const {
  NodeId v = find(name);
  if (v < 0) throw Error(ErrorCode::InputError, "unknown node " + std::string(name));
  return v;
}

EdgeSet make_edge_set(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

EdgeSet set_minus(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

EdgeSet set_intersect(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

bool set_contains(const EdgeSet& a, EdgeId e) {
  return std::binary_search(a.begin(), a.end(), e);
}

bool set_includes(const EdgeSet& big, const EdgeSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Length set_length(const Graph& g, const EdgeSet& s) {
  Length t = 0;
  for (EdgeId e : s) t += g.edge(e).len;
  return t;
}

int compare_colex(const EdgeSet& a, const EdgeSet& b) {
  auto i = a.rbegin();
  auto j = b.rbegin();
  for (; i != a.rend() && j != b.rend(); ++i, ++j) {
    if (*i != *j) return *i < *j ? -1 : 1;
  }
  if (i == a.rend() && j == b.rend()) return 0;
  return i == a.rend() ? -1 : 1;
}

bool cycle_less(Length la, const EdgeSet& a, Length lb, const EdgeSet& b) {
  if (la != lb) return la < lb;
  return compare_colex(a, b) < 0;
}

int Path::find(NodeId v) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == v) return static_cast<int>(i);
  return -1;
}

Path single_node(NodeId v) {
  Path p;
  p.nodes.push_back(v);
  return p;
}

Path reversed(const Path& p) {
  Path r = p;
  std::reverse(r.nodes.begin(), r.nodes.end());
  std::reverse(r.edges.begin(), r.edges.end());
  return r;
}

Path concat(const Path& a, const Path& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.back() != b.front()) throw Error(ErrorCode::InputError, "concat of disjoint paths");
  Path r = a;
  r.nodes.insert(r.nodes.end(), b.nodes.begin() + 1, b.nodes.end());
  r.edges.insert(r.edges.end(), b.edges.begin(), b.edges.end());
  r.length += b.length;
  return r;
}

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.empty()) return p.edges.empty() && p.length == 0;
  if (p.nodes.size() != p.edges.size() + 1) return false;
  Length t = 0;
  for (size_t i = 0; i < p.edges.size(); ++i) {
    const Edge& e = g.edge(p.edges[i]);
    bool fits = (e.u == p.nodes[i] && e.v == p.nodes[i + 1]) ||
                (e.v == p.nodes[i] && e.u == p.nodes[i + 1]);
    if (!fits) return false;
    t += e.len;
  }
  if (make_edge_set(p.edges).size() != p.edges.size()) return false;
  return t == p.length;
}

Path slice(const Graph& g, const Path& p, int i, int j) {
  Path r;
  r.nodes.assign(p.nodes.begin() + i, p.nodes.begin() + j + 1);
  r.edges.assign(p.edges.begin() + i, p.edges.begin() + j);
  for (EdgeId e : r.edges) r.length += g.edge(e).len;
  return r;
}

ValidationReport validate_graph(const Graph& g) {
  ValidationReport r;
  int n = g.node_count();
  if (g.root() < 0 || g.root() >= n) {
    r.root_ok = false;
    r.messages.push_back("root is not a node");
  }
  for (const Edge& e : g.edges()) {
    if (e.len < 0) r.nonnegative = false;
    if (e.u == e.v) r.no_self_loops = false;
  }
  if (!r.nonnegative) r.messages.push_back("negative edge length");
  if (!r.no_self_loops) r.messages.push_back("self loop");

  // Bridges by lowpoint, iterative to survive long paths.
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  int comps = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    ++comps;
    struct Frame { NodeId v; EdgeId via; size_t next; };
    std::vector<Frame> st{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!st.empty()) {
      Frame& f = st.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        NodeId w = g.edge(e).other(f.v);
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          st.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        st.pop_back();
        if (!st.empty()) {
          NodeId p = st.back().v;
          low[p] = std::min(low[p], low[done.v]);
          if (low[done.v] > disc[p]) r.bridges.push_back(done.via);
        }
      }
    }
  }
  std::sort(r.bridges.begin(), r.bridges.end());
  if (comps > 1) {
    r.connected = false;
    r.messages.push_back("graph is disconnected");
  }
  if (!r.bridges.empty() || n < 2) {
    r.two_edge_connected = false;
    r.messages.push_back("graph has a bridge");
  }

  std::set<std::pair<NodeId, NodeId>> simple;
  for (const Edge& e : g.edges())
    if (e.u != e.v) simple.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  if (n >= 3 && static_cast<long>(simple.size()) > 3L * n - 6) {
    r.euler_ok = false;
    r.messages.push_back("edge count exceeds 3|V|-6, graph is not planar");
  }
  return r;
}

void require_valid(const Graph& g) {
  ValidationReport r = validate_graph(g);
  if (!r.nonnegative) throw Error(ErrorCode::NegativeLength, "negative edge length");
  if (!r.no_self_loops) throw Error(ErrorCode::SelfLoop, "self loop");
  if (!r.root_ok) throw Error(ErrorCode::InputError, "root is not a node");
  if (!r.connected || !r.two_edge_connected)
    throw Error(ErrorCode::NotTwoEdgeConnected, "graph is not 2-edge-connected");
}

Path shortest_path(const Graph& g, NodeId a, NodeId b) {
  if (a == b) return single_node(a);
  int m = g.edge_count();
  auto cost = [&](EdgeId e) {
    cpp_int c = g.edge(e).len;
    c <<= m;
    c += cpp_int(1) << e;
    return c;
  };
  int n = g.node_count();
  std::vector<cpp_int> dist(n);
  std::vector<bool> seen(n, false), done(n, false);
  std::vector<EdgeId> via(n, -1);
  using Item = std::pair<cpp_int, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[a] = 0;
  seen[a] = true;
  pq.push({0, a});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (done[v]) continue;
    done[v] = true;
    if (v == b) break;
    for (EdgeId e : g.incident(v)) {
      NodeId w = g.edge(e).other(v);
      if (done[w]) continue;
      cpp_int nd = d + cost(e);
      if (!seen[w] || nd < dist[w]) {
        seen[w] = true;
        dist[w] = nd;
        via[w] = e;
        pq.push({nd, w});
      }
    }
  }
  if (!done[b]) throw Error(ErrorCode::Unreachable, "no path between nodes");
  Path p;
  NodeId cur = b;
  p.nodes.push_back(b);
  while (cur != a) {
    EdgeId e = via[cur];
    p.edges.push_back(e);
    p.length += g.edge(e).len;
    cur = g.edge(e).other(cur);
    p.nodes.push_back(cur);
  }
  return reversed(p);
}

std::vector<Length> distances(const Graph& g, NodeId s) {
  std::vector<Length> dist(g.node_count(), kInfinity);
  using Item = std::pair<Length, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[s] = 0;
  pq.push({0, s});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (EdgeId e : g.incident(v)) {
      NodeId w = g.edge(e).other(v);
      Length nd = d + g.edge(e).len;
      if (nd < dist[w]) {
        dist[w] = nd;
        pq.push({nd, w});
      }
    }
  }
  return dist;
}

Path subpath(const Graph& g, const Path& p, NodeId a, NodeId b) {
  int i = p.find(a);
  int j = p.find(b);
  if (i < 0 || j < 0) throw Error(ErrorCode::NodeNotOnPath, "node not on path");
  return i <= j ? slice(g, p, i, j) : reversed(slice(g, p, j, i));
}

Path cycle_arc_through(const Graph& g, const Path& cycle, NodeId a, NodeId b, NodeId z) {
  if (!cycle.closed()) throw Error(ErrorCode::NodeNotOnPath, "not a closed walk");
  int i = cycle.find(a);
  int j = cycle.find(b);
  if (i < 0 || j < 0) throw Error(ErrorCode::NodeNotOnPath, "node not on cycle");
  bool flip = i > j;
  if (flip) std::swap(i, j);
  int n = static_cast<int>(cycle.nodes.size()) - 1;
  Path inner = slice(g, cycle, i, j);
  Path outer = concat(slice(g, cycle, j, n), slice(g, cycle, 0, i));
  auto interior = [z](const Path& p) {
    for (size_t k = 1; k + 1 < p.nodes.size(); ++k)
      if (p.nodes[k] == z) return true;
    return false;
  };
  bool use_outer = !interior(inner) && interior(outer);
  if (use_outer) return flip ? outer : reversed(outer);
  return flip ? reversed(inner) : inner;
}

std::optional<Path> edges_to_path(const Graph& g, const EdgeSet& s, NodeId start) {
  if (s.empty()) {
    if (start >= 0) return single_node(start);
    return Path{};
  }
  std::unordered_map<NodeId, std::vector<EdgeId>> inc;
  for (EdgeId e : s) {
    const Edge& ed = g.edge(e);
    if (ed.u == ed.v) return std::nullopt;
    inc[ed.u].push_back(e);
    inc[ed.v].push_back(e);
  }
  std::vector<NodeId> ends;
  for (auto& [v, es] : inc) {
    if (es.size() > 2) return std::nullopt;
    if (es.size() == 1) ends.push_back(v);
  }
  std::sort(ends.begin(), ends.end());
  bool cyc = ends.empty();
  if (!cyc && ends.size() != 2) return std::nullopt;
  NodeId first;
  if (start >= 0) {
    if (!inc.count(start)) return std::nullopt;
    if (!cyc && start != ends[0] && start != ends[1]) return std::nullopt;
    first = start;
  } else if (cyc) {
    first = inc.begin()->first;
    for (auto& kv : inc) first = std::min(first, kv.first);
  } else {
    first = ends[0];
  }
  Path p;
  p.nodes.push_back(first);
  std::set<EdgeId> used;
  NodeId cur = first;
  while (true) {
    EdgeId pick = -1;
    for (EdgeId e : inc[cur])
      if (!used.count(e) && (pick < 0 || e < pick)) pick = e;
    if (pick < 0) break;
    used.insert(pick);
    p.edges.push_back(pick);
    p.length += g.edge(pick).len;
    cur = g.edge(pick).other(cur);
    p.nodes.push_back(cur);
  }
  if (used.size() != s.size()) return std::nullopt;
  return p;
}

std::optional<Path> euler_walk(const Graph& g, const EdgeSet& s, NodeId start) {
  return euler_trail(g, s, start, start);
}

std::optional<Path> euler_trail(const Graph& g, const EdgeSet& s, NodeId start, NodeId finish) {
  std::unordered_map<NodeId, std::vector<EdgeId>> inc;
  for (EdgeId e : s) {
    inc[g.edge(e).u].push_back(e);
    if (g.edge(e).v != g.edge(e).u) inc[g.edge(e).v].push_back(e);
  }
  for (auto& [v, es] : inc) {
    std::sort(es.begin(), es.end());
    bool odd = start != finish && (v == start || v == finish);
    if (es.size() % 2 != (odd ? 1u : 0u)) return std::nullopt;
  }
  if (s.empty()) {
    if (start != finish) return std::nullopt;
    return single_node(start);
  }
  if (!inc.count(start)) return std::nullopt;
  std::set<EdgeId> used;
  std::unordered_map<NodeId, size_t> ptr;
  std::vector<std::pair<NodeId, EdgeId>> st{{start, -1}};
  std::vector<std::pair<NodeId, EdgeId>> out;
  while (!st.empty()) {
    NodeId v = st.back().first;
    auto& es = inc[v];
    size_t& k = ptr[v];
    while (k < es.size() && used.count(es[k])) ++k;
    if (k == es.size()) {
      out.push_back(st.back());
      st.pop_back();
    } else {
      EdgeId e = es[k];
      used.insert(e);
      st.push_back({g.edge(e).other(v), e});
    }
  }
  if (used.size() != s.size()) return std::nullopt;
  std::reverse(out.begin(), out.end());
  Path p;
  p.nodes.push_back(out.front().first);
  for (size_t i = 1; i < out.size(); ++i) {
    p.nodes.push_back(out[i].first);
    p.edges.push_back(out[i].second);
    p.length += g.edge(out[i].second).len;
  }
  return p;
}

PathDifference path_difference(const Graph& g, const EdgeSet& p, const EdgeSet& q) {
  PathDifference d;
  d.edges = set_minus(p, q);
  if (auto path = edges_to_path(g, d.edges)) {
    d.path = *path;
    d.is_cycle = path->closed();
    d.is_path = !d.is_cycle;
  }
  return d;
}

Path make_path(const Graph& g, const std::vector<NodeId>& nodes) {
  Path p;
  if (nodes.empty()) return p;
  p.nodes.push_back(nodes[0]);
  std::set<EdgeId> used;
  for (size_t i = 1; i < nodes.size(); ++i) {
    EdgeId pick = -1;
    for (EdgeId e : g.incident(nodes[i - 1]))
      if (g.edge(e).other(nodes[i - 1]) == nodes[i] && !used.count(e)) {
        pick = e;
        break;
      }
    if (pick < 0)
      throw Error(ErrorCode::InputError,
                  "no free edge " + g.name(nodes[i - 1]) + "-" + g.name(nodes[i]));
    used.insert(pick);
    p.nodes.push_back(nodes[i]);
    p.edges.push_back(pick);
    p.length += g.edge(pick).len;
  }
  return p;
}

Path path_from_names(const Graph& g, std::string_view spec) {
  std::vector<NodeId> nodes;
  bool separated = spec.find_first_of(" -,") != std::string_view::npos;
  if (separated) {
    std::string cur;
    for (char c : spec) {
      if (c == ' ' || c == '-' || c == ',') {
        if (!cur.empty()) nodes.push_back(g.at(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) nodes.push_back(g.at(cur));
  } else {
    for (char c : spec) nodes.push_back(g.at(std::string(1, c)));
  }
  return make_path(g, nodes);
}

}  // namespace cdo
