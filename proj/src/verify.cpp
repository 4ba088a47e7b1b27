#include "cdo/verify.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "cdo/cycles.hpp"
#include "cdo/uncross.hpp"

namespace cdo {

std::vector<Length> directed_distances(const Graph& g, const Orientation& o, NodeId s, bool reverse) {
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
      NodeId from = reverse ? o.head(g, e) : o.tail(g, e);
      if (from != v) continue;
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

Length directed_cycle_through(const Graph& g, const Orientation& o, NodeId v) {
  const NodeId z = g.root();
  Length there = directed_distances(g, o, z)[v];
  Length back = directed_distances(g, o, z, true)[v];
  if (there >= kInfinity || back >= kInfinity)
    throw Error(ErrorCode::Unreachable, "no directed closed walk through " + g.name(v) + " and the root");
  return there + back;
}

Length cycle_diameter(const Graph& g) {
  Length best = 0;
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v = u + 1; v < g.node_count(); ++v) best = std::max(best, min_cycle_pair_length(g, u, v));
  return best;
}

namespace {

std::vector<std::vector<Length>> all_pairs(const Graph& g, const Orientation& o) {
  std::vector<std::vector<Length>> d;
  for (NodeId s = 0; s < g.node_count(); ++s) d.push_back(directed_distances(g, o, s));
  return d;
}

Length diameter_of(const std::vector<std::vector<Length>>& d) {
  Length best = 0;
  const int n = static_cast<int>(d.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (d[u][v] >= kInfinity || d[v][u] >= kInfinity) return kInfinity;
      best = std::max(best, d[u][v] + d[v][u]);
    }
  return best;
}

}  // namespace

Length directed_cycle_diameter(const Graph& g, const Orientation& o) {
  Length d = diameter_of(all_pairs(g, o));
  if (d >= kInfinity) throw Error(ErrorCode::NotStronglyConnected, "orientation is not strongly connected");
  return d;
}

OracleOrientation oracle_opt_orientation(const Graph& g, int max_edges) {
  const int m = g.edge_count(), n = g.node_count();
  if (m > max_edges || m > 30)
    throw Error(ErrorCode::TooLarge, "too many edges for exhaustive orientation");
  OracleOrientation out;
  out.witness = Orientation(m);
  std::vector<Length> d(n * n);
  std::vector<unsigned> out_mask(n), in_mask(n);
  auto closure = [&](const std::vector<unsigned>& adj) {
    unsigned seen = 1, frontier = 1;
    while (frontier) {
      unsigned next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier >> v & 1) next |= adj[v];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  };
  const unsigned all = n >= 32 ? ~0u : (1u << n) - 1;
  // Reversing every edge keeps the diameter, so edge 0 stays u -> v.
  const long long total = m == 0 ? 1 : 1LL << (m - 1);
  for (long long mask = 0; mask < total; ++mask) {
    auto forward = [&](int e) { return e == 0 || !((mask >> (e - 1)) & 1); };
    std::fill(out_mask.begin(), out_mask.end(), 0u);
    std::fill(in_mask.begin(), in_mask.end(), 0u);
    for (const Edge& e : g.edges()) {
      NodeId t = forward(e.id) ? e.u : e.v, h = e.other(t);
      out_mask[t] |= 1u << h;
      in_mask[h] |= 1u << t;
    }
    if (closure(out_mask) != all || closure(in_mask) != all) continue;
    ++out.strongly_connected;
    std::fill(d.begin(), d.end(), kInfinity);
    for (int v = 0; v < n; ++v) d[v * n + v] = 0;
    for (const Edge& e : g.edges()) {
      NodeId t = forward(e.id) ? e.u : e.v, h = e.other(t);
      d[t * n + h] = std::min(d[t * n + h], e.len);
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    Length best = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) best = std::max(best, d[i * n + j] + d[j * n + i]);
    if (best < out.d_opt) {
      out.d_opt = best;
      for (int e = 0; e < m; ++e) out.witness.dir[e] = forward(e) ? Dir::UtoV : Dir::VtoU;
    }
  }
  return out;
}

Length oracle_min_cycle(const Graph& g, NodeId u, NodeId v, int node_bound) {
  if (g.node_count() > node_bound) throw Error(ErrorCode::TooLarge, "too many nodes for enumeration");
  const int n = g.node_count(), m = g.edge_count();
  std::vector<char> used_edge(m, 0), on_path(n, 0);
  Length best = kInfinity;
  auto avoiding = [&]() {
    std::vector<Length> dist(n, kInfinity);
    dist[u] = 0;
    // Bellman-Ford style relaxation keeps the oracle free of the Dijkstra code.
    for (int it = 0; it < n; ++it)
      for (const Edge& e : g.edges()) {
        if (used_edge[e.id] || e.u == e.v) continue;
        if (dist[e.u] < kInfinity) dist[e.v] = std::min(dist[e.v], dist[e.u] + e.len);
        if (dist[e.v] < kInfinity) dist[e.u] = std::min(dist[e.u], dist[e.v] + e.len);
      }
    return dist[v];
  };
  std::function<void(NodeId, Length)> walk = [&](NodeId x, Length len) {
    if (x == v) {
      Length rest = avoiding();
      if (rest < kInfinity) best = std::min(best, len + rest);
      return;
    }
    for (EdgeId e : g.incident(x)) {
      NodeId y = g.edge(e).other(x);
      if (y == x || on_path[y]) continue;
      on_path[y] = 1;
      used_edge[e] = 1;
      walk(y, len + g.edge(e).len);
      used_edge[e] = 0;
      on_path[y] = 0;
    }
  };
  on_path[u] = 1;
  walk(u, 0);
  return best;
}

double Ratio::value() const {
  if (den == 0) return num == 0 ? 1.0 : INFINITY;
  return static_cast<double>(num) / static_cast<double>(den);
}

void Ratio::raise(Length n, Length d) {
  if (ratio_greater(n, d, num, den)) {
    num = n;
    den = d;
  }
}

BoundReport full_report(const Graph& g, const ReportOptions& opt) {
  require_valid(g);
  BoundReport r;
  r.n = g.node_count();
  r.m = g.edge_count();
  r.d_g = cycle_diameter(g);
  if (r.m <= opt.oracle_max_edges) r.d_opt = oracle_opt_orientation(g, opt.oracle_max_edges).d_opt;

  std::vector<Family> after;
  GraphOrientation go;
  try {
    for (Family& f : build_family(g)) {
      UncrossStats st;
      after.push_back(cancel_crossings(std::move(f), {}, &st));
      r.uncross_pairs += st.pairs;
    }
    go = orient_graph(g, after);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedInstance) throw;
    r.rejected = true;
    r.reason = e.what();
    return r;
  }
  r.orientation = orientation_json(go.o);

  const NodeId z = g.root();
  const auto dist = all_pairs(g, go.o);
  auto d = [&](NodeId a, NodeId b) { return dist[a][b]; };
  auto check = [&](Length num, Length den, Length k) {
    if (!ratio_within(num, den, k)) ++r.violations;
  };

  for (size_t i = 0; i < after.size(); ++i) {
    const Family& fa = after[i];
    const OrientRun& run = go.runs[i];
    const Family& ff = run.family;
    r.competitions += run.stats.competitions;
    r.reassigned += run.stats.reassigned;

    EdgeSet gc;
    for (int c : ff.alive_ids()) gc = set_union(gc, current_cycle(ff, c));
    for (EdgeId e : gc)
      if (go.o.setter[e] < 0) ++r.unset_edges;

    for (auto [v, id] : fa.serving) {
      NodeBound nb;
      nb.v = v;
      nb.star = fa.original_length.at(v);
      nb.after = fa.at(id).length;
      nb.final = set_length(g, current_cycle(ff, ff.serving.at(v)));
      if (d(z, v) >= kInfinity || d(v, z) >= kInfinity) {
        ++r.unreachable;
        nb.walk = kInfinity;
      } else {
        nb.walk = d(z, v) + d(v, z);
      }
      r.r9.raise(nb.after, nb.star);
      r.growth3.raise(nb.final, nb.after);
      r.r27.raise(nb.final, nb.star);
      check(nb.after, nb.star, 9);
      check(nb.final, nb.after, 3);
      check(nb.final, nb.star, 27);
      if (nb.walk < kInfinity) {
        r.r405.raise(nb.walk, nb.star);
        check(nb.walk, nb.star, 405);
      }
      if (nb.star > r.d_g) ++r.violations;
      r.nodes.push_back(nb);
    }

    const Diagnostics diag = extract_diagnostics(go.o, run);
    r.broken += diag.broken;
    r.properties.heavy_backwards += diag.properties.heavy_backwards;
    r.properties.leading_backwards += diag.properties.leading_backwards;
    r.properties.inner_disagree += diag.properties.inner_disagree;
    r.properties.outer_backwards += diag.properties.outer_backwards;
    r.properties.special_backwards += diag.properties.special_backwards;

    for (int c : ff.alive_ids()) {
      const ServingCycle& s = ff.at(c);
      if (s.served.empty()) continue;
      // Served nodes in the order of I(S), the rest in the order of P_s(S).
      std::vector<NodeId> order;
      for (NodeId v : diag.cycles[c].i.nodes)
        if (std::binary_search(s.served.begin(), s.served.end(), v) &&
            std::find(order.begin(), order.end(), v) == order.end())
          order.push_back(v);
      for (NodeId v : s.served)
        if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
      CycleBound cb;
      cb.component = static_cast<int>(i);
      cb.id = c;
      cb.length = set_length(g, current_cycle(ff, c));
      NodeId at = z;
      for (NodeId v : order) {
        if (d(at, v) >= kInfinity) {
          cb.walk = kInfinity;
          break;
        }
        cb.walk += d(at, v);
        at = v;
      }
      if (cb.walk < kInfinity && d(at, z) < kInfinity)
        cb.walk += d(at, z);
      else
        cb.walk = kInfinity;
      if (cb.walk < kInfinity) {
        r.r15.raise(cb.walk, cb.length);
        check(cb.walk, cb.length, 15);
      } else {
        ++r.violations;
      }
      r.cycles.push_back(cb);
    }
  }

  r.d_h = diameter_of(dist);
  if (r.d_opt && r.d_h < kInfinity) {
    r.ratio1620.raise(r.d_h, *r.d_opt);
    check(r.d_h, *r.d_opt, 1620);
  }
  return r;
}

namespace {

nlohmann::json ratio_json(const Ratio& q) {
  return {{"num", q.num}, {"den", q.den}, {"value", q.value()}};
}

nlohmann::json length_json(Length x) {
  if (x >= kInfinity) return nullptr;
  return x;
}

}  // namespace

nlohmann::json report_json(const BoundReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["rejected"] = r.rejected;
  if (r.rejected) j["reason"] = r.reason;
  j["D_G"] = r.d_g;
  j["D_opt"] = r.d_opt ? nlohmann::json(*r.d_opt) : nlohmann::json(nullptr);
  if (r.rejected) return j;
  j["D_H"] = length_json(r.d_h);
  j["r9"] = ratio_json(r.r9);
  j["growth3"] = ratio_json(r.growth3);
  j["r27"] = ratio_json(r.r27);
  j["r405"] = ratio_json(r.r405);
  j["r15"] = ratio_json(r.r15);
  j["ratio1620"] = r.d_opt ? ratio_json(r.ratio1620) : nlohmann::json(nullptr);
  j["violations"] = r.violations;
  j["unreachable"] = r.unreachable;
  j["unset_edges"] = r.unset_edges;
  j["broken_I"] = r.broken;
  j["properties"] = {{"heavy_backwards", r.properties.heavy_backwards},
                     {"leading_backwards", r.properties.leading_backwards},
                     {"inner_disagree", r.properties.inner_disagree},
                     {"outer_backwards", r.properties.outer_backwards},
                     {"special_backwards", r.properties.special_backwards}};
  j["uncross_pairs"] = r.uncross_pairs;
  j["competitions"] = r.competitions;
  j["reassigned"] = r.reassigned;
  nlohmann::json nodes = nlohmann::json::array();
  for (const NodeBound& nb : r.nodes)
    nodes.push_back({{"v", nb.v},
                     {"star", nb.star},
                     {"after", nb.after},
                     {"final", nb.final},
                     {"walk", length_json(nb.walk)}});
  j["nodes"] = nodes;
  nlohmann::json cycles = nlohmann::json::array();
  for (const CycleBound& cb : r.cycles)
    cycles.push_back(
        {{"component", cb.component}, {"id", cb.id}, {"length", cb.length}, {"walk", length_json(cb.walk)}});
  j["cycles"] = cycles;
  j["orientation"] = r.orientation;
  return j;
}

}  // namespace cdo
