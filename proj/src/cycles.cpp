#include "cdo/cycles.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdo {

using boost::multiprecision::cpp_int;

bool operator<(const CycleWalk& a, const CycleWalk& b) {
  return cycle_less(a.length, a.edges, b.length, b.edges);
}

std::vector<EdgeId> canonical_edges(const Path& closed) {
  std::vector<EdgeId> best;
  const auto& es = closed.edges;
  size_t n = es.size();
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<EdgeId> seq = es;
    if (dir) std::reverse(seq.begin(), seq.end());
    for (size_t r = 0; r < n; ++r) {
      std::vector<EdgeId> cand(seq.begin() + r, seq.end());
      cand.insert(cand.end(), seq.begin(), seq.begin() + r);
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

namespace {

template <class Cost>
struct TwoPathFlow {
  struct Arc {
    int to;
    int cap;
    Cost cost;
    int rev;
    EdgeId edge;
  };
  std::vector<std::vector<Arc>> adj;

  explicit TwoPathFlow(int n) : adj(n) {}

  void add(int u, int v, Cost c, EdgeId e) {
    adj[u].push_back({v, 1, c, static_cast<int>(adj[v].size()), e});
    adj[v].push_back({u, 0, -c, static_cast<int>(adj[u].size()) - 1, e});
  }

  // Two augmentations along Bellman-Ford shortest paths in the residual graph.
  bool run(int s, int t) {
    int n = static_cast<int>(adj.size());
    for (int round = 0; round < 2; ++round) {
      std::vector<Cost> dist(n);
      std::vector<bool> reach(n, false);
      std::vector<std::pair<int, int>> prev(n, {-1, -1});
      reach[s] = true;
      dist[s] = 0;
      for (int it = 0; it < n; ++it) {
        bool changed = false;
        for (int u = 0; u < n; ++u) {
          if (!reach[u]) continue;
          for (int k = 0; k < static_cast<int>(adj[u].size()); ++k) {
            const Arc& a = adj[u][k];
            if (a.cap <= 0) continue;
            Cost nd = dist[u] + a.cost;
            if (!reach[a.to] || nd < dist[a.to]) {
              reach[a.to] = true;
              dist[a.to] = nd;
              prev[a.to] = {u, k};
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (!reach[t]) return false;
      for (int v = t; v != s;) {
        auto [u, k] = prev[v];
        Arc& a = adj[u][k];
        a.cap -= 1;
        adj[a.to][a.rev].cap += 1;
        v = u;
      }
    }
    return true;
  }

  EdgeSet used_edges() const {
    // Forward arcs are the ones with positive original capacity; flow on an
    // arc shows up as zero residual capacity.
    std::vector<EdgeId> out;
    for (const auto& arcs : adj)
      for (const Arc& a : arcs)
        if (a.cost > 0 && a.cap == 0) out.push_back(a.edge);
    return make_edge_set(out);
  }
};

}  // namespace

std::optional<CycleWalk> min_cycle_pair(const Graph& g, NodeId a, NodeId b) {
  if (a == b) throw Error(ErrorCode::InputError, "min_cycle_pair needs two nodes");
  int m = g.edge_count();
  TwoPathFlow<cpp_int> f(g.node_count());
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    cpp_int c = e.len;
    c <<= m;
    c += cpp_int(1) << e.id;
    f.add(e.u, e.v, c, e.id);
    f.add(e.v, e.u, c, e.id);
  }
  if (!f.run(a, b)) return std::nullopt;
  CycleWalk w;
  w.edges = f.used_edges();
  w.length = set_length(g, w.edges);
  NodeId start = g.root();
  bool has_root = false;
  for (EdgeId e : w.edges)
    if (g.edge(e).u == start || g.edge(e).v == start) has_root = true;
  if (!has_root) start = a;
  auto walk = euler_walk(g, w.edges, start);
  if (!walk) throw Error(ErrorCode::NoCycle, "flow support is not Eulerian");
  w.walk = *walk;
  return w;
}

Length min_cycle_pair_length(const Graph& g, NodeId a, NodeId b) {
  TwoPathFlow<Length> f(g.node_count());
  // Zero length edges still need positive cost so that no edge carries flow
  // both ways; the shift keeps the order on lengths intact.
  int m = g.edge_count();
  Length shift = m + 1;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    Length c = e.len * shift + 1;
    f.add(e.u, e.v, c, e.id);
    f.add(e.v, e.u, c, e.id);
  }
  if (!f.run(a, b)) return kInfinity;
  return set_length(g, f.used_edges());
}

CycleWalk min_cycle_through(const Graph& g, NodeId v) {
  auto w = min_cycle_pair(g, v, g.root());
  if (!w) throw Error(ErrorCode::NoCycle, "no cycle through " + g.name(v) + " and the root");
  return *w;
}

}  // namespace cdo
