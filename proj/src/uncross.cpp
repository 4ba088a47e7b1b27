#include "cdo/uncross.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace cdo {

bool ratio_within(Length num, Length den, Length k) {
  if (den == 0) return num == 0;
  return static_cast<__int128>(num) <= static_cast<__int128>(k) * den;
}

bool ratio_greater(Length n1, Length d1, Length n2, Length d2) {
  // n1/d1 > n2/d2 with x/0 above everything finite and 0/0 read as 1.
  auto norm = [](Length& n, Length& d) {
    if (d == 0 && n == 0) n = d = 1;
  };
  norm(n1, d1);
  norm(n2, d2);
  if (d1 == 0) return d2 != 0;
  if (d2 == 0) return false;
  return static_cast<__int128>(n1) * d2 > static_cast<__int128>(n2) * d1;
}

namespace {

struct Placed {
  int id;
  Placement pl;
};

std::vector<Placed> placed_pool(const Family& f, int parent) {
  std::vector<Placed> out;
  for (int c : f.at(parent).pool) {
    if (!f.at(c).alive) continue;
    std::string why;
    auto pl = try_place(f.graph(), f.at(parent), f.at(c).edges, &why);
    if (!pl) throw Error(ErrorCode::UnsupportedInstance, "pool cycle cannot be placed: " + why);
    out.push_back({c, std::move(*pl)});
  }
  return out;
}

const Placement& placement(const std::vector<Placed>& ps, int id) {
  for (const auto& p : ps)
    if (p.id == id) return p.pl;
  throw Error(ErrorCode::EmptyCandidate, "cycle is not in the pool");
}

}  // namespace

std::vector<CrossingRecord> nvh_pairs(const Family& f, int parent, UncrossStats* stats) {
  auto pool = placed_pool(f, parent);
  const Graph& g = f.graph();
  std::vector<std::tuple<int, Length, int, int, CrossingRecord>> found;
  for (const auto& l : pool)
    for (const auto& r : pool) {
      if (l.id == r.id) continue;
      if (f.at(l.id).served.empty() || f.at(r.id).served.empty()) continue;
      auto rec = crossing_of(f, parent, l.id, l.pl, r.id, r.pl);
      if (!rec) continue;
      if (rec->x < 0) {
        if (stats) ++stats->missing_cross_node;
        continue;
      }
      if (!rec->nvh) continue;
      int ix = l.pl.ps.find(rec->x);
      Length d = slice(g, l.pl.ps, 0, ix).length;
      found.emplace_back(l.pl.a, d, r.pl.a, r.pl.b, *rec);
    }
  std::sort(found.begin(), found.end(), [&](const auto& x, const auto& y) {
    auto kx = std::tuple(std::get<0>(x), std::get<1>(x), std::get<2>(x), std::get<3>(x));
    auto ky = std::tuple(std::get<0>(y), std::get<1>(y), std::get<2>(y), std::get<3>(y));
    if (kx != ky) return kx < ky;
    const CrossingRecord& a = std::get<4>(x);
    const CrossingRecord& b = std::get<4>(y);
    if (a.left != b.left)
      return cycle_less(f.at(a.left).length, f.at(a.left).edges, f.at(b.left).length,
                        f.at(b.left).edges);
    return cycle_less(f.at(a.right).length, f.at(a.right).edges, f.at(b.right).length,
                      f.at(b.right).edges);
  });
  std::vector<CrossingRecord> out;
  for (auto& t : found) out.push_back(std::get<4>(t));
  return out;
}

namespace {

// l(R(P)): the longest suffix of P made of shortcut edges created before the
// current processing step.
Length r_length(const Family& f, const Path& p) {
  const Graph& g = f.graph();
  Length r = 0;
  for (int i = static_cast<int>(p.edges.size()) - 1; i >= 0; --i) {
    auto it = f.shortcut_stamp.find(p.edges[i]);
    if (it == f.shortcut_stamp.end() || it->second >= f.processed) break;
    r += g.edge(p.edges[i]).len;
  }
  return r;
}

bool simple_path(const Path& p) {
  std::set<NodeId> seen(p.nodes.begin(), p.nodes.end());
  return seen.size() == p.nodes.size();
}

// Path from x to the opposite span, starting at `start`, plus the chain of
// alternating crossings behind it.
std::vector<CandidatePath> candidates(const Family& f, int parent, const std::vector<Placed>& pool,
                                      int self, bool self_left, int other, const Path& start,
                                      int lo, int hi) {
  const Graph& g = f.graph();
  const ServingCycle& c = f.at(parent);
  std::vector<CandidatePath> out;
  out.push_back({start, r_length(f, start), -1});
  struct Item {
    int cycle;
    bool left;
    Path path;
  };
  std::vector<Item> frontier{{self, self_left, start}};
  std::set<int> visited{self, other};
  while (!frontier.empty()) {
    std::vector<Item> next;
    for (const Item& it : frontier) {
      const Placement& cur = placement(pool, it.cycle);
      for (const auto& cand : pool) {
        if (visited.count(cand.id) || f.at(cand.id).served.empty()) continue;
        std::optional<CrossingRecord> rec;
        if (it.left)
          rec = crossing_of(f, parent, it.cycle, cur, cand.id, cand.pl);
        else
          rec = crossing_of(f, parent, cand.id, cand.pl, it.cycle, cur);
        if (!rec || rec->x < 0 || !rec->nvh) continue;
        int cut = it.path.find(rec->x);
        if (cut < 0) continue;
        Path head = slice(g, it.path, 0, cut);
        int ix = cand.pl.ps.find(rec->x);
        Path tail;
        int endpos;
        if (it.left) {
          tail = reversed(slice(g, cand.pl.ps, 0, ix));
          endpos = cand.pl.a;
        } else {
          tail = slice(g, cand.pl.ps, ix, static_cast<int>(cand.pl.ps.nodes.size()) - 1);
          endpos = cand.pl.b;
        }
        if (endpos < lo || endpos > hi) continue;
        Path p = concat(head, tail);
        if (!simple_path(p)) continue;
        if (c.ps.find(p.back()) < 0) continue;
        visited.insert(cand.id);
        out.push_back({p, r_length(f, p), cand.id});
        next.push_back({cand.id, !it.left, p});
      }
    }
    frontier = std::move(next);
  }
  return out;
}

const CandidatePath& best(const std::vector<CandidatePath>& v) {
  const CandidatePath* b = &v.front();
  for (const auto& c : v)
    if (c.cost() < b->cost() ||
        (c.cost() == b->cost() && compare_colex(c.path.edge_set(), b->path.edge_set()) < 0))
      b = &c;
  return *b;
}

EdgeSet disjoint_union(const std::vector<EdgeSet>& parts) {
  EdgeSet out;
  size_t total = 0;
  for (const auto& p : parts) {
    out = set_union(out, p);
    total += p.size();
  }
  if (out.size() != total)
    throw Error(ErrorCode::UnsupportedInstance, "rewritten cycle repeats an edge");
  return out;
}

int replace_cycle(Family& f, int parent, int old, const EdgeSet& edges, const EdgeSet& sc,
                  UncrossStats* stats) {
  ServingCycle& o = f.at(old);
  if (edges == o.edges) {
    o.sc = sc;
    return old;
  }
  auto& pool = f.at(parent).pool;
  for (int id : pool) {
    if (id == old || !f.at(id).alive || f.at(id).edges != edges) continue;
    ServingCycle& e = f.at(id);
    for (NodeId v : o.served) f.serving[v] = id;
    e.served.insert(e.served.end(), o.served.begin(), o.served.end());
    std::sort(e.served.begin(), e.served.end());
    e.sc = set_union(e.sc, sc);
    o.alive = false;
    o.served.clear();
    pool.erase(std::find(pool.begin(), pool.end(), old));
    if (stats) ++stats->merged;
    return id;
  }
  for (const auto& c : f.cycles)
    if (c.alive && c.edges == edges)
      throw Error(ErrorCode::UnsupportedInstance, "rewritten cycle coincides with a cycle outside the pool");
  ServingCycle n;
  n.id = static_cast<int>(f.cycles.size());
  n.edges = edges;
  n.length = set_length(f.graph(), edges);
  n.served = o.served;
  n.sc = sc;
  n.origin = old;
  for (NodeId v : n.served) f.serving[v] = n.id;
  f.at(old).alive = false;
  f.at(old).served.clear();
  f.cycles.push_back(std::move(n));
  auto& pl = f.at(parent).pool;
  *std::find(pl.begin(), pl.end(), old) = static_cast<int>(f.cycles.size()) - 1;
  return static_cast<int>(f.cycles.size()) - 1;
}

void stamp(Family& f, const EdgeSet& shortcut) {
  for (EdgeId e : shortcut) {
    auto it = f.shortcut_stamp.find(e);
    if (it == f.shortcut_stamp.end()) f.shortcut_stamp[e] = f.processed;
  }
}

nlohmann::json names(const Graph& g, const std::vector<NodeId>& vs) {
  nlohmann::json a = nlohmann::json::array();
  for (NodeId v : vs) a.push_back(g.name(v));
  return a;
}

}  // namespace

void uncross_pair(Family& f, int parent, const CrossingRecord& r, const UncrossOptions& opt,
                  UncrossStats* stats) {
  const Graph& g = f.graph();
  auto pool = placed_pool(f, parent);
  const Placement& p1 = placement(pool, r.left);
  const Placement& p2 = placement(pool, r.right);
  const ServingCycle& c = f.at(parent);
  const int ix1 = p1.ps.find(r.x), ix2 = p2.ps.find(r.x);
  const int e1 = static_cast<int>(p1.ps.nodes.size()) - 1;
  const int e2 = static_cast<int>(p2.ps.nodes.size()) - 1;
  Path P1 = reversed(slice(g, p1.ps, 0, ix1));  // x to k
  Path Q1 = slice(g, p1.ps, ix1, e1);           // x to l
  Path P2 = slice(g, p2.ps, ix2, e2);           // x to h
  Path Q2 = reversed(slice(g, p2.ps, 0, ix2));  // x to g
  const int lo = p2.a, hi = p1.b;

  auto star = candidates(f, parent, pool, r.left, true, r.right, Q1, lo, hi);
  auto dstar = candidates(f, parent, pool, r.right, false, r.left, Q2, lo, hi);
  const CandidatePath& b1 = best(star);
  const CandidatePath& b2 = best(dstar);
  const bool first = b1.cost() < b2.cost();
  const NodeId end = first ? b1.path.back() : b2.path.back();
  int e = -1;
  for (int i = lo; i <= hi; ++i)
    if (c.ps.nodes[i] == end) e = i;
  if (e < 0) throw Error(ErrorCode::EmptyCandidate, "candidate does not end on the span");
  Path sp = shortest_path(g, r.x, end);
  EdgeSet SP = sp.edge_set();

  EdgeSet new1 = disjoint_union(
      {P1.edge_set(), SP, set_minus(c.edges, slice(g, c.ps, p1.a, e).edge_set())});
  EdgeSet new2 = disjoint_union(
      {P2.edge_set(), SP, set_minus(c.edges, slice(g, c.ps, e, p2.b).edge_set())});

  const EdgeSet q1 = Q1.edge_set(), q2 = Q2.edge_set();
  const EdgeSet sc1 = f.at(r.left).sc, sc2 = f.at(r.right).sc;
  EdgeSet nsc1, nsc2;
  if (first) {
    nsc2 = set_union(set_minus(sc2, q2), SP);
    nsc1 = set_union(set_minus(sc1, set_minus(q1, SP)), set_minus(SP, q1));
  } else {
    nsc1 = set_union(set_minus(sc1, q1), SP);
    nsc2 = set_union(set_minus(sc2, set_minus(q2, SP)), set_minus(SP, q2));
  }
  stamp(f, set_minus(new1, set_union(f.at(r.left).edges, c.edges)));
  stamp(f, set_minus(new2, set_union(f.at(r.right).edges, c.edges)));

  const EdgeSet old1 = f.at(r.left).edges, old2 = f.at(r.right).edges;
  int id1 = replace_cycle(f, parent, r.left, new1, nsc1, stats);
  int id2 = replace_cycle(f, parent, r.right, new2, nsc2, stats);
  if (stats) ++stats->pairs;

  if (opt.trace) {
    nlohmann::json j;
    j["parent"] = parent;
    j["left"] = r.left;
    j["right"] = r.right;
    j["x"] = g.name(r.x);
    j["branch"] = first ? "left" : "right";
    j["cost_left"] = b1.cost();
    j["cost_right"] = b2.cost();
    j["chosen"] = names(g, (first ? b1 : b2).path.nodes);
    j["end"] = g.name(end);
    j["sp"] = names(g, sp.nodes);
    j["new_left"] = id1;
    j["new_right"] = id2;
    j["left_changed"] = new1 != old1;
    j["right_changed"] = new2 != old2;
    j["sc_left"] = nsc1;
    j["sc_right"] = nsc2;
    *opt.trace << j.dump() << "\n";
  }
}

Family cancel_crossings(Family f, const UncrossOptions& opt, UncrossStats* stats) {
  auto hook = [&](Family& fam, int parent) {
    const size_t guard = 8 * fam.at(parent).pool.size() * fam.at(parent).pool.size() + 16;
    for (size_t round = 0;; ++round) {
      auto pairs = nvh_pairs(fam, parent, round == 0 ? stats : nullptr);
      if (pairs.empty()) break;
      if (round >= guard)
        throw Error(ErrorCode::UnsupportedInstance, "crossing cancellation does not terminate");
      uncross_pair(fam, parent, pairs.front(), opt, stats);
    }
  };
  grow_hierarchy(f, hook);
  build_tree(f);
  return f;
}

NineReport assert_nine_bound(const Family& after, bool throw_on_violation) {
  NineReport rep;
  for (auto [v, id] : after.serving) {
    Length num = after.at(id).length;
    Length den = after.original_length.at(v);
    if (rep.worst < 0 || ratio_greater(num, den, rep.worst_num, rep.worst_den)) {
      rep.worst = v;
      rep.worst_num = num;
      rep.worst_den = den;
    }
    if (!ratio_within(num, den, 9)) ++rep.violations;
  }
  if (rep.violations && throw_on_violation)
    throw Error(ErrorCode::BoundViolation, "serving cycle longer than nine times the original");
  return rep;
}

}  // namespace cdo
