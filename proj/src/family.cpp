#include "cdo/family.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

namespace cdo {

const char* weight_name(Weight w) {
  switch (w) {
    case Weight::Light: return "light";
    case Weight::Heavy: return "heavy";
    case Weight::VeryHeavy: return "very-heavy";
  }
  return "?";
}

std::vector<int> Family::alive_ids() const {
  std::vector<int> out;
  for (const auto& c : cycles)
    if (c.alive) out.push_back(c.id);
  return out;
}

Weight weight_of(Length pf, Length ps_father) {
  if (3 * pf > 2 * ps_father) return Weight::VeryHeavy;
  if (3 * pf > ps_father) return Weight::Heavy;
  return Weight::Light;
}

namespace {

std::set<NodeId> node_set(const Graph& g, const EdgeSet& s) {
  std::set<NodeId> out;
  for (EdgeId e : s) {
    out.insert(g.edge(e).u);
    out.insert(g.edge(e).v);
  }
  return out;
}

struct Key {
  int a = -1;
  int b = -1;
  bool loop = false;
};

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool place_key(const Graph& g, const ServingCycle& parent, const EdgeSet& d, Key& key,
               std::string* why) {
  const Path& s = parent.ps;
  const int L = static_cast<int>(s.edges.size());
  if (!set_includes(d, parent.pc)) return fail(why, "cycle misses the common path of the parent");
  std::vector<bool> in(L);
  for (int i = 0; i < L; ++i) in[i] = set_contains(d, s.edges[i]);
  int a = 0;
  while (a < L && in[a]) ++a;
  if (a == L) {
    EdgeSet extra = set_minus(d, parent.edges);
    if (extra.empty()) return fail(why, "cycle equals its parent");
    auto on_parent = node_set(g, parent.edges);
    std::vector<NodeId> touch;
    for (NodeId v : node_set(g, extra))
      if (on_parent.count(v)) touch.push_back(v);
    if (touch.size() != 1) return fail(why, "attached part touches the parent more than once");
    int pos = s.find(touch[0]);
    if (pos < 0) return fail(why, "attached part hangs off the common path");
    key = {pos, pos, true};
    return true;
  }
  int t = 0;
  while (t < L && in[L - 1 - t]) ++t;
  int b = L - t;
  for (int i = a; i < b; ++i)
    if (in[i]) return fail(why, "intersection with the parent is not one path through the root");
  key = {a, b, false};
  return true;
}

}  // namespace

std::optional<Placement> try_place(const Graph& g, const ServingCycle& parent, const EdgeSet& d,
                                   std::string* why) {
  Key key;
  if (!place_key(g, parent, d, key, why)) return std::nullopt;
  const Path& s = parent.ps;
  EdgeSet extra = set_minus(d, parent.edges);
  NodeId from = s.nodes[key.a];
  NodeId to = s.nodes[key.b];
  auto ps = edges_to_path(g, extra, from);
  if (!ps || ps->back() != to) ps = euler_trail(g, extra, from, to);
  if (!ps) {
    fail(why, "difference with the parent is not one trail between the attachment nodes");
    return std::nullopt;
  }
  auto on_parent = node_set(g, parent.edges);
  for (size_t i = 1; i + 1 < ps->nodes.size(); ++i)
    if (on_parent.count(ps->nodes[i])) {
      fail(why, "son path returns to the parent");
      return std::nullopt;
    }
  Placement p;
  p.a = key.a;
  p.b = key.b;
  p.loop = key.loop;
  p.ps = *ps;
  p.pf = key.loop ? single_node(from) : slice(g, s, key.a, key.b);
  p.pc = set_intersect(d, parent.edges);
  return p;
}

Placement place(const Graph& g, const ServingCycle& parent, const EdgeSet& d) {
  std::string why;
  auto p = try_place(g, parent, d, &why);
  if (!p) throw Error(ErrorCode::MalformedIntersection, why);
  return *p;
}

namespace {

void assign_served(Family& f) {
  const Graph& g = f.graph();
  f.serving.clear();
  for (auto& c : f.cycles) c.served.clear();
  std::map<NodeId, int> best;
  for (const auto& c : f.cycles) {
    if (!c.alive) continue;
    for (NodeId v : node_set(g, c.edges)) {
      if (v == g.root()) continue;
      auto it = best.find(v);
      if (it == best.end() ||
          cycle_less(c.length, c.edges, f.cycles[it->second].length, f.cycles[it->second].edges))
        best[v] = c.id;
    }
  }
  for (auto [v, id] : best) {
    f.serving[v] = id;
    f.cycles[id].served.push_back(v);
  }
}

void init_root(Family& f) {
  const Graph& g = f.graph();
  int r = -1;
  for (const auto& c : f.cycles)
    if (c.alive && (r < 0 || cycle_less(c.length, c.edges, f.cycles[r].length, f.cycles[r].edges)))
      r = c.id;
  f.root = r;
  ServingCycle& root = f.cycles[r];
  auto walk = edges_to_path(g, root.edges, g.root());
  if (!walk || !walk->closed()) walk = euler_walk(g, root.edges, g.root());
  if (!walk) throw Error(ErrorCode::UnsupportedInstance, "root cycle is not a closed trail");
  root.ps = *walk;
  root.pf = single_node(g.root());
  root.pc.clear();
  root.father = -1;
  root.a = 0;
  root.b = static_cast<int>(walk->edges.size());
  root.gen = 0;
  root.lc = 0;
}

Family make_family(const Graph& g, std::vector<std::pair<EdgeSet, Length>> cyc) {
  std::sort(cyc.begin(), cyc.end(), [](const auto& x, const auto& y) {
    return cycle_less(x.second, x.first, y.second, y.first);
  });
  Family f;
  f.g = &g;
  std::set<NodeId> nodes;
  for (auto& [edges, len] : cyc) {
    ServingCycle c;
    c.id = static_cast<int>(f.cycles.size());
    c.edges = edges;
    c.length = len;
    c.origin = c.id;
    f.span = set_union(f.span, edges);
    for (NodeId v : node_set(g, edges))
      if (v != g.root()) nodes.insert(v);
    f.cycles.push_back(std::move(c));
  }
  f.nodes.assign(nodes.begin(), nodes.end());
  assign_served(f);
  for (auto [v, id] : f.serving) {
    f.original_cycle[v] = id;
    f.original_length[v] = f.cycles[id].length;
  }
  init_root(f);
  for (const auto& c : f.cycles)
    if (c.id != f.root) f.cycles[f.root].pool.push_back(c.id);
  return f;
}

int find_set(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

std::vector<Family> build_family(const Graph& g) {
  require_valid(g);
  const NodeId z = g.root();
  std::map<EdgeSet, Length> unique;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (v == z) continue;
    CycleWalk w = min_cycle_through(g, v);
    unique.emplace(w.edges, w.length);
  }
  // Components of the cycle union once z is removed.
  std::vector<int> parent(g.node_count());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [edges, len] : unique)
    for (EdgeId e : edges) {
      const Edge& ed = g.edge(e);
      if (ed.u == z || ed.v == z) continue;
      parent[find_set(parent, ed.u)] = find_set(parent, ed.v);
    }
  std::map<int, std::vector<std::pair<EdgeSet, Length>>> groups;
  for (const auto& [edges, len] : unique) {
    NodeId rep = -1;
    for (EdgeId e : edges) {
      const Edge& ed = g.edge(e);
      rep = ed.u != z ? ed.u : ed.v;
      if (rep != z) break;
    }
    groups[find_set(parent, rep)].push_back({edges, len});
  }
  std::vector<std::pair<NodeId, Family>> out;
  for (auto& [rep, cyc] : groups) {
    Family f = make_family(g, cyc);
    out.push_back({f.nodes.front(), std::move(f)});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Family> fams;
  for (auto& [n, f] : out) fams.push_back(std::move(f));
  return fams;
}

Family family_from_cycles(const Graph& g, const std::vector<std::string>& walks) {
  std::vector<std::pair<EdgeSet, Length>> cyc;
  for (const auto& w : walks) {
    Path p = path_from_names(g, w);
    if (!p.closed()) throw Error(ErrorCode::InputError, "walk is not closed: " + w);
    cyc.push_back({p.edge_set(), p.length});
  }
  return make_family(g, cyc);
}

std::map<std::pair<int, int>, std::vector<int>> partition_sons(const Family& f, int parent,
                                                               const std::vector<int>& candidates) {
  std::map<std::pair<int, int>, std::vector<int>> groups;
  const ServingCycle& p = f.at(parent);
  for (int c : candidates) {
    if (!f.at(c).alive) continue;
    Key key;
    std::string why;
    if (!place_key(f.graph(), p, f.at(c).edges, key, &why))
      throw Error(ErrorCode::MalformedIntersection, why);
    groups[{key.a, key.b}].push_back(c);
  }
  for (auto& [k, members] : groups)
    std::sort(members.begin(), members.end(), [&](int x, int y) {
      return cycle_less(f.at(x).length, f.at(x).edges, f.at(y).length, f.at(y).edges);
    });
  return groups;
}

void grow_hierarchy(Family& f, const ProcessHook& hook) {
  std::vector<int> current{f.root};
  f.processed = 0;
  while (!current.empty()) {
    std::vector<int> next;
    for (int c : current) {
      ++f.processed;
      if (hook) hook(f, c);
      auto groups = partition_sons(f, c, f.at(c).pool);
      f.at(c).sons.clear();
      for (auto& [key, members] : groups) {
        int son = members.front();
        Placement pl = place(f.graph(), f.at(c), f.at(son).edges);
        ServingCycle& s = f.at(son);
        s.father = c;
        s.a = pl.a;
        s.b = pl.b;
        s.loop = pl.loop;
        s.ps = std::move(pl.ps);
        s.pf = std::move(pl.pf);
        s.pc = std::move(pl.pc);
        s.gen = f.at(c).gen + 1;
        s.pool.assign(members.begin() + 1, members.end());
        f.at(c).sons.push_back(son);
        next.push_back(son);
      }
      f.at(c).pool.clear();
    }
    current = std::move(next);
  }
  f.hierarchy = true;
}

namespace {

bool contains(const ServingCycle& big, const ServingCycle& small) {
  if (big.loop) return false;
  if (small.loop) return big.a < small.a && small.a < big.b;
  if (big.a == small.a && big.b == small.b) return false;
  return big.a <= small.a && small.b <= big.b;
}

}  // namespace

bool intervals_cross(int a1, int b1, int a2, int b2) { return a1 < a2 && a2 < b1 && b1 < b2; }

std::vector<Block> brother_blocks(Family& f, int father, const std::vector<int>& sons) {
  const Length psf = f.at(father).ps.length;
  std::vector<int> order = sons;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::pair(f.at(x).a, f.at(x).b) < std::pair(f.at(y).a, f.at(y).b);
  });
  for (int c : order) {
    ServingCycle& sc = f.at(c);
    sc.weight = weight_of(sc.pf.length, psf);
    sc.container = -1;
    for (int o : order) {
      if (o == c || !contains(f.at(o), sc)) continue;
      if (sc.container < 0) {
        sc.container = o;
        continue;
      }
      const ServingCycle& cur = f.at(sc.container);
      const ServingCycle& cand = f.at(o);
      int wc = cur.b - cur.a, wn = cand.b - cand.a;
      if (wn < wc || (wn == wc && cycle_less(cand.length, cand.edges, cur.length, cur.edges)))
        sc.container = o;
    }
  }
  std::function<int(int)> level = [&](int c) -> int {
    int k = f.at(c).container;
    return k < 0 ? 0 : level(k) + 1;
  };
  std::map<int, std::vector<int>> by_container;
  for (int c : order) {
    f.at(c).lc = level(c);
    by_container[f.at(c).container].push_back(c);
  }
  for (int c : order) {
    ServingCycle& sc = f.at(c);
    sc.special = false;
    if (sc.container < 0) continue;
    const ServingCycle& b = f.at(sc.container);
    if (by_container[sc.container].size() != 1) continue;
    if (set_intersect(sc.ps.edge_set(), b.ps.edge_set()).empty()) continue;
    sc.special = true;
  }
  std::vector<Block> blocks;
  for (auto& [container, members] : by_container) {
    Block cur;
    for (int c : members) {
      if (!cur.members.empty()) {
        const ServingCycle& p = f.at(cur.members.back());
        const ServingCycle& q = f.at(c);
        bool linked = p.b == q.a || intervals_cross(p.a, p.b, q.a, q.b);
        if (!linked) {
          blocks.push_back(cur);
          cur.members.clear();
        }
      }
      cur.father = father;
      cur.container = container;
      cur.lc = f.at(c).lc;
      cur.members.push_back(c);
    }
    if (!cur.members.empty()) blocks.push_back(cur);
  }
  std::sort(blocks.begin(), blocks.end(), [&](const Block& x, const Block& y) {
    const ServingCycle& p = f.at(x.members.front());
    const ServingCycle& q = f.at(y.members.front());
    return std::tuple(x.lc, p.a, p.b) < std::tuple(y.lc, q.a, q.b);
  });
  return blocks;
}

void build_tree(Family& f) {
  f.blocks.clear();
  std::vector<int> current{f.root};
  while (!current.empty()) {
    std::vector<int> next;
    for (int c : current) {
      if (f.at(c).sons.empty()) continue;
      auto blocks = brother_blocks(f, c, f.at(c).sons);
      f.blocks.insert(f.blocks.end(), blocks.begin(), blocks.end());
      for (int s : f.at(c).sons) {
        f.at(s).gen = f.at(c).gen + 1;
        next.push_back(s);
      }
    }
    current = std::move(next);
  }
}

bool is_ancestor(const Family& f, int a, int b) {
  for (int c = f.at(b).father; c >= 0; c = f.at(c).father)
    if (c == a) return true;
  return false;
}

int lowest_common_ancestor(const Family& f, int a, int b) {
  if (a == b || is_ancestor(f, a, b) || is_ancestor(f, b, a))
    throw Error(ErrorCode::AncestorRelation, "cycles are in ancestor relation");
  std::set<int> up;
  for (int c = f.at(a).father; c >= 0; c = f.at(c).father) up.insert(c);
  for (int c = f.at(b).father; c >= 0; c = f.at(c).father)
    if (up.count(c)) return c;
  throw Error(ErrorCode::AncestorRelation, "cycles are in different trees");
}

namespace {

bool all_within(const std::vector<NodeId>& served, const Path& p, int from, int to) {
  for (NodeId v : served) {
    int i = p.find(v);
    if (i < from || i > to) return false;
  }
  return true;
}

}  // namespace

std::optional<CrossingRecord> crossing_of(const Family& f, int parent, int left, const Placement& pl,
                                          int right, const Placement& pr) {
  if (pl.loop || pr.loop || !intervals_cross(pl.a, pl.b, pr.a, pr.b)) return std::nullopt;
  const Graph& g = f.graph();
  const ServingCycle& c = f.at(parent);
  auto on_parent = node_set(g, c.edges);
  CrossingRecord r;
  r.left = left;
  r.right = right;
  std::set<NodeId> second(pr.ps.nodes.begin(), pr.ps.nodes.end());
  for (NodeId v : pl.ps.nodes)
    if (!on_parent.count(v) && second.count(v) && (r.x < 0 || v < r.x)) r.x = v;
  if (r.x < 0) return r;
  const int i1 = pl.ps.find(r.x), i2 = pr.ps.find(r.x);
  const int e1 = static_cast<int>(pl.ps.nodes.size()) - 1;
  const int e2 = static_cast<int>(pr.ps.nodes.size()) - 1;
  const auto& u1 = f.at(left).served;
  const auto& u2 = f.at(right).served;
  if (all_within(u1, pl.ps, 0, i1) && all_within(u2, pr.ps, i2, e2))
    r.kind = CrossKind::Outer;
  else if (all_within(u1, pl.ps, i1, e1) && all_within(u2, pr.ps, 0, i2))
    r.kind = CrossKind::Inner;
  else
    r.kind = CrossKind::Mixed;
  Length span = std::max(pl.pf.length, pr.pf.length);
  r.nvh = r.kind == CrossKind::Outer && 3 * span <= 2 * c.ps.length;
  return r;
}

Placement placement_of(const ServingCycle& c) {
  Placement p;
  p.a = c.a;
  p.b = c.b;
  p.loop = c.loop;
  p.ps = c.ps;
  p.pf = c.pf;
  p.pc = c.pc;
  return p;
}

std::vector<CrossingRecord> detect_crossings(const Family& f, int parent) {
  std::vector<CrossingRecord> out;
  const auto& sons = f.at(parent).sons;
  for (int x : sons)
    for (int y : sons) {
      const ServingCycle& p = f.at(x);
      const ServingCycle& q = f.at(y);
      if (!intervals_cross(p.a, p.b, q.a, q.b)) continue;
      auto r = crossing_of(f, parent, x, placement_of(p), y, placement_of(q));
      if (!r) continue;
      if (r->x < 0) throw Error(ErrorCode::NoCrossNode, "crossing cycles share no node off the parent");
      out.push_back(*r);
    }
  std::sort(out.begin(), out.end(), [&](const CrossingRecord& r, const CrossingRecord& s) {
    return std::pair(f.at(r.left).a, f.at(r.right).a) < std::pair(f.at(s.left).a, f.at(s.right).a);
  });
  return out;
}

EdgeSet current_cycle(const Family& f, int c) {
  const ServingCycle& s = f.at(c);
  if (s.father < 0) return s.edges;
  return set_union(s.ps.edge_set(), set_minus(current_cycle(f, s.father), s.pf.edge_set()));
}

nlohmann::json family_dump(const Family& f) {
  const Graph& g = f.graph();
  auto names = [&](const std::vector<NodeId>& vs) {
    nlohmann::json a = nlohmann::json::array();
    for (NodeId v : vs) a.push_back(g.name(v));
    return a;
  };
  nlohmann::json cycles = nlohmann::json::array();
  for (const auto& c : f.cycles) {
    if (!c.alive) continue;
    nlohmann::json j;
    j["id"] = c.id;
    auto walk = euler_walk(g, c.edges, g.root());
    j["walk"] = walk ? names(walk->nodes) : nlohmann::json(nullptr);
    j["length"] = c.length;
    j["served"] = names(c.served);
    j["father"] = c.father;
    j["sons"] = c.sons;
    j["g"] = c.gen;
    j["lc"] = c.lc;
    j["interval"] = {c.a, c.b};
    j["loop"] = c.loop;
    j["container"] = c.container;
    j["special"] = c.special;
    j["class"] = weight_name(c.weight);
    j["son_path"] = names(c.ps.nodes);
    j["sc"] = c.sc;
    cycles.push_back(j);
  }
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : f.blocks)
    blocks.push_back({{"father", b.father}, {"lc", b.lc}, {"members", b.members}});
  return {{"root", f.root}, {"cycles", cycles}, {"blocks", blocks}};
}

}  // namespace cdo
