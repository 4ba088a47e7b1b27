#include "cdo/orient.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdo {

NodeId Orientation::tail(const Graph& g, EdgeId e) const {
  if (dir[e] == Dir::Unset) return -1;
  return dir[e] == Dir::UtoV ? g.edge(e).u : g.edge(e).v;
}

NodeId Orientation::head(const Graph& g, EdgeId e) const {
  if (dir[e] == Dir::Unset) return -1;
  return dir[e] == Dir::UtoV ? g.edge(e).v : g.edge(e).u;
}

namespace {

using boost::multiprecision::cpp_int;
using Members = std::vector<int>;

Members sub(const Members& m, int from, int to) { return Members(m.begin() + from, m.begin() + to); }

class Director {
 public:
  Director(OrientRun& run, Orientation& o) : run_(run), f_(run.family), g_(f_.graph()), o_(o) {
    const int n = static_cast<int>(f_.cycles.size());
    run_.intended.assign(n, 0);
    run_.travel.assign(n, 0);
    oriented_.assign(n, 0);
    in_level_.assign(n, 0);
  }

  void run() {
    const int root = f_.root;
    const Path& ps = f_.at(root).ps;
    const int n = static_cast<int>(ps.nodes.size());
    run_.travel[root] = (n >= 3 && ps.nodes[1] > ps.nodes[n - 2]) ? -1 : 1;
    run_.intended[root] = 1;
    oriented_[root] = 1;
    if (run_.travel[root] > 0)
      along(ps, 0, static_cast<int>(ps.edges.size()), root, false);
    else
      against(ps, 0, static_cast<int>(ps.edges.size()), root, false);

    std::vector<int> level{root};
    while (!level.empty()) {
      std::fill(in_level_.begin(), in_level_.end(), 0);
      for (int c : level)
        for (int s : f_.at(c).sons) in_level_[s] = 1;
      for (int c : level) direct_sons(c);
      std::vector<int> next;
      for (int c : level)
        for (int s : f_.at(c).sons)
          if (f_.at(s).alive) next.push_back(s);
      level = std::move(next);
    }
  }

 private:
  OrientRun& run_;
  Family& f_;
  const Graph& g_;
  Orientation& o_;
  std::vector<char> oriented_;
  std::vector<char> in_level_;
  std::map<std::pair<int, int>, int> hard_crossings_;  // (father, lc) -> count
  std::map<EdgeId, std::vector<int>> holders_;        // cycles whose direction the edge follows

  // Edge orientation primitives. Without change an edge already directed the
  // other way goes to the preferred of the two cycles.
  void put(EdgeId e, NodeId from, int who, bool change) {
    const Dir d = g_.edge(e).u == from ? Dir::UtoV : Dir::VtoU;
    auto& hold = holders_[e];
    if (o_.set(e) && o_.dir[e] == d) {
      if (std::find(hold.begin(), hold.end(), who) == hold.end()) hold.push_back(who);
      return;
    }
    if (o_.set(e) && !change) {
      for (int other : hold)
        if (other == who || !preferred(who, other)) return;
      ++run_.stats.contested;
    }
    o_.dir[e] = d;
    o_.setter[e] = who;
    hold.assign(1, who);
  }
  void along(const Path& p, int from, int to, int who, bool change) {
    for (int k = from; k < to; ++k) put(p.edges[k], p.nodes[k], who, change);
  }
  void against(const Path& p, int from, int to, int who, bool change) {
    for (int k = from; k < to; ++k) put(p.edges[k], p.nodes[k + 1], who, change);
  }

  // Length with the edge id perturbation behind the cycle order, so that no
  // two different edge sets compare equal.
  cpp_int weight(const EdgeSet& s) const {
    cpp_int w = cpp_int(set_length(g_, s)) << g_.edge_count();
    for (EdgeId e : s) w += cpp_int(1) << e;
    return w;
  }

  // P_c(c) minus the edges of other.
  EdgeSet common_rest(int c, const EdgeSet& other) const {
    return set_minus(set_minus(current_cycle(f_, c), f_.at(c).ps.edge_set()), other);
  }

  bool preferred(int c1, int c2) const {
    const EdgeSet e1 = current_cycle(f_, c1), e2 = current_cycle(f_, c2);
    const int k1 = run_.intended[c1], k2 = run_.intended[c2];
    if (k1 == k2) return weight(e1) < weight(e2);
    if (k1 > 0) return weight(e1) < weight(e2) + 2 * weight(common_rest(c2, e1));
    return weight(e1) + 2 * weight(common_rest(c1, e2)) < weight(e2);
  }

  bool shorter(int c1, int c2) const {
    return weight(current_cycle(f_, c1)) < weight(current_cycle(f_, c2));
  }

  Path fwd(int c) const {
    const ServingCycle& s = f_.at(c);
    return run_.travel[s.father] > 0 ? s.ps : reversed(s.ps);
  }
  int edges_of(const Path& p) const { return static_cast<int>(p.edges.size()); }
  bool heavy(int c) const { return f_.at(c).weight != Weight::Light; }

  void mark(int c, int cls) {
    run_.intended[c] = cls;
    run_.travel[c] = run_.travel[f_.at(c).father] * cls;
    oriented_[c] = 1;
  }
  void forwards(int c) {
    mark(c, 1);
    Path p = fwd(c);
    along(p, 0, edges_of(p), c, false);
  }
  void backwards(int c) {
    mark(c, -1);
    Path p = fwd(c);
    against(p, 0, edges_of(p), c, false);
  }

  // Crossing with a cross-node, nullopt otherwise.
  std::optional<CrossingRecord> crossing(int x, int y) const {
    const ServingCycle& p = f_.at(x);
    const ServingCycle& q = f_.at(y);
    if (std::pair(q.a, q.b) < std::pair(p.a, p.b)) return crossing(y, x);
    auto r = crossing_of(f_, p.father, x, placement_of(p), y, placement_of(q));
    if (!r || r->x < 0) return std::nullopt;
    return r;
  }

  void direct_sons(int father) {
    Members sons;
    for (int s : f_.at(father).sons)
      if (f_.at(s).alive && !oriented_[s]) sons.push_back(s);
    if (sons.empty()) return;
    std::vector<Block> blocks = brother_blocks(f_, father, sons);
    if (run_.travel[father] < 0) {
      std::reverse(blocks.begin(), blocks.end());
      for (Block& b : blocks) std::reverse(b.members.begin(), b.members.end());
    }
    for (const Block& b : blocks)
      for (size_t i = 0; i < b.members.size(); ++i)
        for (size_t j = i + 1; j < b.members.size(); ++j) {
          auto r = crossing(b.members[i], b.members[j]);
          if (!r || r->kind == CrossKind::Inner) continue;
          if (++hard_crossings_[{father, b.lc}] > 1)
            throw Error(ErrorCode::UnsupportedInstance,
                        "two very heavy outer crossings in one containment level");
        }
    direct_brothers(blocks, -1);
    for (int s : sons)
      if (!oriented_[s] && f_.at(s).father == father) forwards(s);
  }

  void direct_brothers(const std::vector<Block>& blocks, int container) {
    for (const Block& b : blocks) {
      if (b.container != container) continue;
      direct(b.members);
      run_.blocks.push_back({b.father, b.container, b.members});
      for (int m : b.members) direct_brothers(blocks, m);
    }
  }

  void direct(const Members& ms) {
    const Path p1 = fwd(ms.front());
    const Path pn = fwd(ms.back());
    DirParams d;
    if (!p1.edges.empty() && o_.set(p1.edges.front()))
      d.l1 = o_.tail(g_, p1.edges.front()) == p1.front() ? 1 : -1;
    if (!pn.edges.empty() && o_.set(pn.edges.back()))
      d.l2 = o_.head(g_, pn.edges.back()) == pn.back() ? 1 : -1;
    if (ms.size() == 2) {
      auto r = crossing(ms[0], ms[1]);
      if (r && r->kind == CrossKind::Inner && f_.at(ms[0]).container >= 0) {
        inner_crossing(ms[0], ms[1], d.l1, d.l2);
        return;
      }
    }
    direct_k(ms, d.l1, d.l2);
  }

  void direct_k(const Members& ms, int l1, int l2) {
    if (ms.size() == 1)
      one(ms[0], l1, l2);
    else if (ms.size() == 2)
      two(ms[0], ms[1], l1, l2);
    else
      many(ms, l1, l2);
  }

  void inner_crossing(int c1, int c2, int l1, int l2) {
    const int k = f_.at(c1).container;
    if (k < 0 || !oriented_[k])
      throw Error(ErrorCode::MissingContainingBrother, "inner crossing pair without a containing brother");
    if (run_.intended[k] > 0) {
      one(c1, l1, 1);
      one(c2, 1, l2);
    } else {
      one(c1, l1, -1);
      one(c2, -1, l2);
    }
  }

  void sequence(const Members& ms, bool first_forwards) {
    for (size_t i = 0; i < ms.size(); ++i) {
      if ((i % 2 == 0) == first_forwards)
        forwards(ms[i]);
      else
        backwards(ms[i]);
    }
  }

  void many(const Members& ms, int l1, int l2) {
    const int n = static_cast<int>(ms.size());
    auto pf = [&](int i) { return f_.at(ms[i]).pf.length; };
    int m1 = 0;
    for (int i = 1; i < n; ++i)
      if (pf(i) > pf(m1)) m1 = i;
    int m2 = m1 == 0 ? 1 : 0;
    for (int i = 0; i < n; ++i)
      if (i != m1 && pf(i) > pf(m2)) m2 = i;

    if (!heavy(ms[m1])) {
      const bool even = n % 2 == 0;
      if (l1 != -1 && ((even && l2 != 1) || (!even && l2 != -1))) {
        sequence(ms, true);
      } else if (l1 != 1 && ((even && l2 != -1) || (!even && l2 != 1))) {
        sequence(ms, false);
      } else if (l1 == 1 && ((even && l2 == 1) || (!even && l2 == -1))) {
        two(ms[0], ms[1], 1, 1);
        sequence(sub(ms, 2, n), false);
      } else if (!even && l1 == -1 && l2 == 1) {
        two(ms[n - 2], ms[n - 1], 1, 1);
        sequence(sub(ms, 0, n - 2), false);
      } else {
        one(ms[0], -1, -1);
        two(ms[1], ms[2], 1, 1);
        sequence(sub(ms, 3, n), false);
      }
      return;
    }

    int partner = -1;
    if (m1 > 0 && crossing(ms[m1 - 1], ms[m1])) partner = m1 - 1;
    if (m1 + 1 < n && crossing(ms[m1], ms[m1 + 1])) {
      if (partner >= 0)
        throw Error(ErrorCode::UnsupportedInstance, "very heavy cycle crosses both neighbors");
      partner = m1 + 1;
    }
    const bool m1_crossing = partner >= 0;

    if (!heavy(ms[m2]) && !m1_crossing) {
      if (m1 == 0) {
        one(ms[0], l1, 1);
        direct_k(sub(ms, 1, n), -1, l2);
      } else if (m1 == n - 1) {
        one(ms[n - 1], 1, l2);
        direct_k(sub(ms, 0, n - 1), l1, -1);
      } else {
        one(ms[m1], 1, 1);
        direct_k(sub(ms, 0, m1), l1, -1);
        direct_k(sub(ms, m1 + 1, n), -1, l2);
      }
      return;
    }

    int j, k;
    if (m1_crossing) {
      j = std::min(m1, partner);
      k = j + 1;
    } else {
      j = std::min(m1, m2);
      k = std::max(m1, m2);
    }
    if (j == 0)
      one(ms[0], l1, 1);
    else
      one(ms[j], 1, 1);
    const int delta = k == n - 1 ? l2 : 1;
    if (j == k - 1 && !m1_crossing)
      one(ms[k], -1, delta);
    else
      one(ms[k], 1, delta);
    if (j > 0) direct_k(sub(ms, 0, j), l1, -1);
    if (j < k - 1) direct_k(sub(ms, j + 1, k), -1, -1);
    if (k < n - 1) direct_k(sub(ms, k + 1, n), -1, l2);
  }

  void two(int c1, int c2, int l1, int l2) {
    if (heavy(c1) || heavy(c2)) {
      one(c1, l1, 1);
      one(c2, -1, l2);
      return;
    }
    if (l1 != -1 && l2 != 1) {
      forwards(c1);
      backwards(c2);
    } else if ((l1 == 0 && l2 == 1) || (l1 == -1 && l2 != -1)) {
      backwards(c1);
      forwards(c2);
    } else {
      split(c1, c2, l1 == 1 ? 1 : -1);
    }
  }

  // v1 -> u -> v3 (s = 1) or its mirror, the shared run going to the shorter cycle.
  void split(int c1, int c2, int s) {
    const Path p1 = fwd(c1), p2 = fwd(c2);
    const int n1 = edges_of(p1), n2 = edges_of(p2);
    int k = 0;
    while (k < n1 && k < n2 && p1.edges[n1 - 1 - k] == p2.edges[k]) ++k;
    const bool first_shorter = shorter(c1, c2);
    mark(c1, s);
    mark(c2, s);
    if (s > 0) {
      along(p1, 0, n1 - k, c1, false);
      along(p2, k, n2, c2, false);
      if (first_shorter)
        along(p1, n1 - k, n1, c1, false);
      else
        along(p2, 0, k, c2, false);
    } else {
      against(p1, 0, n1 - k, c1, false);
      against(p2, k, n2, c2, false);
      if (first_shorter)
        against(p1, n1 - k, n1, c1, false);
      else
        against(p2, 0, k, c2, false);
    }
  }

  void one(int c, int l1, int l2) {
    if (l1 != -1 && l2 != -1) {
      forwards(c);
      return;
    }
    const ServingCycle& sc = f_.at(c);
    const bool special = sc.special && sc.container >= 0 && run_.intended[sc.container] > 0;
    if (!heavy(c) && !special && l1 != 1 && l2 != 1) {
      backwards(c);
      return;
    }
    const Path p = fwd(c);
    const int n = edges_of(p);
    mark(c, 1);
    if (l1 == -1 && n > 0 && o_.set(p.edges.front()) && o_.tail(g_, p.edges.front()) != p.front()) {
      const int rival = setter(p.edges.front());
      const EdgeSet shared = f_.at(rival).ps.edge_set();
      int k = 0;
      while (k < n && set_contains(shared, p.edges[k])) ++k;
      along(p, k, n, c, false);
      compete(c, rival, p, 0, k);
    }
    if (l2 == -1 && n > 0 && o_.set(p.edges.back()) && o_.head(g_, p.edges.back()) != p.back()) {
      const int rival = setter(p.edges.back());
      const EdgeSet shared = f_.at(rival).ps.edge_set();
      int k = n;
      while (k > 0 && set_contains(shared, p.edges[k - 1])) --k;
      along(p, 0, k, c, false);
      compete(c, rival, p, k, n);
    }
    along(p, 0, n, c, false);
  }

  int setter(EdgeId e) const {
    const int s = o_.setter[e];
    if (s < 0) throw Error(ErrorCode::LedgerMiss, "directed edge without a recorded setter");
    return s;
  }

  void compete(int c, int rival, const Path& p, int from, int to) {
    ++run_.stats.competitions;
    if (!preferred(c, rival)) return;
    for (int k = from; k < to; ++k)
      for (int other : holders_[p.edges[k]])
        if (other != c && !preferred(c, other)) return;
    ++run_.stats.overwritten;
    along(p, from, to, c, true);
    if (shorter(rival, c)) reassign(rival, c, p, from, to);
  }

  void reassign(int rival, int c, const Path& p, int from, int to) {
    const std::set<NodeId> nodes(p.nodes.begin() + from, p.nodes.begin() + to + 1);
    const EdgeSet edges = make_edge_set(std::vector<EdgeId>(p.edges.begin() + from, p.edges.begin() + to));
    const Members candidates = f_.at(rival).sons;
    for (int d : candidates) {
      ServingCycle& sd = f_.at(d);
      if (d == c || !sd.alive || oriented_[d] || in_level_[d]) continue;
      if (sd.pf.edges.empty()) {
        if (!nodes.count(sd.pf.front())) continue;
      } else if (!set_includes(edges, sd.pf.edge_set())) {
        continue;
      }
      const Path& ps = f_.at(c).ps;
      int i = ps.find(sd.pf.front()), j = ps.find(sd.pf.back());
      if (i < 0 || j < 0) continue;
      if (i > j) {
        std::swap(i, j);
        sd.ps = reversed(sd.ps);
        sd.pf = reversed(sd.pf);
      }
      sd.a = i;
      sd.b = sd.loop ? i : j;
      sd.father = c;
      auto& old = f_.at(rival).sons;
      old.erase(std::remove(old.begin(), old.end(), d), old.end());
      f_.at(c).sons.push_back(d);
      sd.pc = set_minus(current_cycle(f_, d), sd.ps.edge_set());
      regenerate(d, f_.at(c).gen + 1);
      ++run_.stats.reassigned;
    }
    auto& mine = f_.at(c).sons;
    std::sort(mine.begin(), mine.end(), [&](int x, int y) {
      return std::pair(f_.at(x).a, f_.at(x).b) < std::pair(f_.at(y).a, f_.at(y).b);
    });
  }

  void regenerate(int c, int gen) {
    f_.at(c).gen = gen;
    for (int s : f_.at(c).sons) regenerate(s, gen + 1);
  }
};

}  // namespace

OrientRun main_orient(Family f, Orientation& o) {
  OrientRun run;
  run.family = std::move(f);
  Director(run, o).run();
  return run;
}

GraphOrientation orient_graph(const Graph& g, std::vector<Family> families) {
  GraphOrientation out;
  out.o = Orientation(g.edge_count());
  for (Family& f : families) out.runs.push_back(main_orient(std::move(f), out.o));
  for (const Edge& e : g.edges())
    if (!out.o.set(e.id)) out.o.dir[e.id] = e.u < e.v ? Dir::UtoV : Dir::VtoU;
  return out;
}

namespace {

// Direction of each edge of p relative to its traversal: +1, -1, 0 when unset.
std::vector<int> edge_signs(const Graph& g, const Orientation& o, const Path& p) {
  std::vector<int> d(p.edges.size());
  for (size_t k = 0; k < p.edges.size(); ++k) {
    NodeId t = o.tail(g, p.edges[k]);
    d[k] = t < 0 ? 0 : (t == p.nodes[k] ? 1 : -1);
  }
  return d;
}

}  // namespace

Diagnostics extract_diagnostics(const Orientation& o, const OrientRun& run, bool throw_on_broken) {
  const Family& f = run.family;
  const Graph& g = f.graph();
  Diagnostics out;
  const int n = static_cast<int>(f.cycles.size());
  out.cycles.resize(n);
  std::vector<int> store(n, 0);  // measured direction relative to the stored P_s

  for (int c = 0; c < n; ++c) {
    const ServingCycle& sc = f.at(c);
    CycleDiagnostics& cd = out.cycles[c];
    cd.id = c;
    if (!sc.alive || run.travel[c] == 0) continue;
    const Path& p = sc.ps;
    const int m = static_cast<int>(p.edges.size());
    const std::vector<int> d = edge_signs(g, o, p);
    int lo = m + 1, hi = -1;
    bool missing = false;
    for (NodeId v : sc.served) {
      int i = p.find(v);
      if (i < 0) {
        missing = true;
        continue;
      }
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
    int s = 0;
    if (hi >= 0) {
      if (lo < hi) {
        s = d[lo];
        for (int k = lo; k < hi; ++k)
          if (d[k] != s || s == 0) cd.broken = true;
      } else {
        const int left = lo > 0 ? d[lo - 1] : 0;
        const int right = lo < m ? d[lo] : 0;
        if (left != 0 && (left == right || right == 0))
          s = left;
        else if (left == 0 && right != 0)
          s = right;
      }
    }
    if (missing) cd.broken = true;
    if (cd.broken || s == 0) s = run.travel[c];
    store[c] = s;
    if (hi < 0) lo = hi = s > 0 ? 0 : m;
    if (cd.broken) {
      lo = std::clamp(lo, 0, m);
      hi = std::clamp(hi, lo, m);
    }
    int a = lo, b = hi;
    while (a > 0 && d[a - 1] == s) --a;
    while (b < m && d[b] == s) ++b;
    int ta = a, tb = b;  // J run bounds
    while (ta > 0 && d[ta - 1] == -s) --ta;
    while (tb < m && d[tb] == -s) ++tb;
    if (s > 0) {
      cd.i = slice(g, p, a, b);
      cd.t = p.nodes[a];
      cd.h = p.nodes[b];
      cd.jt = reversed(slice(g, p, ta, a));
      cd.jh = reversed(slice(g, p, b, tb));
    } else {
      cd.i = reversed(slice(g, p, a, b));
      cd.t = p.nodes[b];
      cd.h = p.nodes[a];
      cd.jt = slice(g, p, b, tb);
      cd.jh = slice(g, p, ta, a);
    }
    if (cd.jt.edges.empty()) cd.jt = Path{};
    if (cd.jh.edges.empty()) cd.jh = Path{};
    if (cd.broken) ++out.broken;
  }
  for (int c = 0; c < n; ++c) {
    const ServingCycle& sc = f.at(c);
    if (!sc.alive || run.travel[c] == 0) continue;
    out.cycles[c].cls = sc.father < 0 ? 1 : store[c] * store[sc.father];
  }
  if (throw_on_broken && out.broken > 0)
    throw Error(ErrorCode::BrokenI, "served nodes are not inside one directed run");

  auto cls = [&](int c) { return out.cycles[c].cls; };
  PropertyReport& pr = out.properties;
  for (int c = 0; c < n; ++c) {
    const ServingCycle& sc = f.at(c);
    if (!sc.alive || sc.father < 0 || run.travel[c] == 0) continue;
    if (sc.weight != Weight::Light && cls(c) < 0) ++pr.heavy_backwards;
    if (sc.special && sc.container >= 0 && run.intended[sc.container] > 0 &&
        (cls(c) < 0 || cls(sc.container) < 0))
      ++pr.special_backwards;
  }
  for (const DirectedBlock& b : run.blocks) {
    const auto& ms = b.members;
    const size_t k = ms.size();
    if (k > 2) {
      if (cls(ms[0]) < 0 && cls(ms[1]) < 0) ++pr.leading_backwards;
      if (cls(ms[k - 1]) < 0 && cls(ms[k - 2]) < 0) ++pr.leading_backwards;
    }
    for (size_t i = 0; i < k; ++i)
      for (size_t j = i + 1; j < k; ++j) {
        int x = ms[i], y = ms[j];
        if (std::pair(f.at(y).a, f.at(y).b) < std::pair(f.at(x).a, f.at(x).b)) std::swap(x, y);
        if (f.at(x).father != f.at(y).father) continue;
        auto r = crossing_of(f, f.at(x).father, x, placement_of(f.at(x)), y, placement_of(f.at(y)));
        if (!r || r->x < 0) continue;
        if (r->kind == CrossKind::Inner) {
          const int k2 = f.at(x).container;
          if (k2 < 0) continue;
          if (cls(x) != cls(k2) || cls(y) != cls(k2)) ++pr.inner_disagree;
        } else if (r->kind == CrossKind::Outer) {
          if (cls(x) < 0) ++pr.outer_backwards;
          if (cls(y) < 0) ++pr.outer_backwards;
        }
      }
  }
  return out;
}

nlohmann::json orientation_json(const Orientation& o) {
  nlohmann::json out = nlohmann::json::array();
  for (size_t e = 0; e < o.dir.size(); ++e) {
    const char* d = o.dir[e] == Dir::UtoV ? "uv" : o.dir[e] == Dir::VtoU ? "vu" : "unset";
    out.push_back({{"id", e}, {"dir", d}});
  }
  return out;
}

Orientation orientation_from_json(const Graph& g, const nlohmann::json& j) {
  Orientation o(g.edge_count());
  if (!j.is_array()) throw Error(ErrorCode::InputError, "orientation must be an array");
  for (const auto& item : j) {
    if (!item.contains("id") || !item.contains("dir")) throw Error(ErrorCode::InputError, "orientation entry needs id and dir");
    const int e = item["id"].get<int>();
    if (e < 0 || e >= g.edge_count()) throw Error(ErrorCode::InputError, "orientation edge out of range");
    const std::string d = item["dir"].get<std::string>();
    if (d == "uv")
      o.dir[e] = Dir::UtoV;
    else if (d == "vu")
      o.dir[e] = Dir::VtoU;
    else if (d != "unset")
      throw Error(ErrorCode::InputError, "unknown direction " + d);
  }
  return o;
}

namespace {

nlohmann::json names(const Graph& g, const Path& p) {
  nlohmann::json a = nlohmann::json::array();
  for (NodeId v : p.nodes) a.push_back(g.name(v));
  return a;
}

}  // namespace

nlohmann::json diagnostics_json(const Graph& g, const Diagnostics& d) {
  nlohmann::json cycles = nlohmann::json::array();
  for (const CycleDiagnostics& c : d.cycles) {
    if (c.cls == 0) continue;
    cycles.push_back({{"id", c.id},
                      {"class", c.cls > 0 ? "forwards" : "backwards"},
                      {"I", names(g, c.i)},
                      {"t", c.t < 0 ? "" : g.name(c.t)},
                      {"h", c.h < 0 ? "" : g.name(c.h)},
                      {"J_t", names(g, c.jt)},
                      {"J_h", names(g, c.jh)},
                      {"broken", c.broken}});
  }
  const PropertyReport& p = d.properties;
  return {{"cycles", cycles},
          {"broken", d.broken},
          {"properties",
           {{"heavy_backwards", p.heavy_backwards},
            {"leading_backwards", p.leading_backwards},
            {"inner_disagree", p.inner_disagree},
            {"outer_backwards", p.outer_backwards},
            {"special_backwards", p.special_backwards}}}};
}

}  // namespace cdo
