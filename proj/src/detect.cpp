#include "oddsign/detect.hpp"

#include <algorithm>
#include <set>

namespace oddsign {

const char* to_string(ThreePathKind k) {
  switch (k) {
    case ThreePathKind::theta:
      return "theta";
    case ThreePathKind::prism:
      return "prism";
    case ThreePathKind::pyramid:
      return "pyramid";
  }
  return "?";
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::none:
      return "none";
    case Violation::c4:
      return "c4";
    case Violation::theta:
      return "theta";
    case Violation::prism:
      return "prism";
    case Violation::even_wheel:
      return "even_wheel";
  }
  return "?";
}

KindSet KindSet::only(ThreePathKind k) {
  KindSet s;
  s.theta = k == ThreePathKind::theta;
  s.prism = k == ThreePathKind::prism;
  s.pyramid = k == ThreePathKind::pyramid;
  return s;
}

bool KindSet::has(ThreePathKind k) const {
  switch (k) {
    case ThreePathKind::theta:
      return theta;
    case ThreePathKind::prism:
      return prism;
    case ThreePathKind::pyramid:
      return pyramid;
  }
  return false;
}

VertexSet ThreePathConfig::members() const {
  VertexSet s;
  for (const auto& p : paths) s |= p.members();
  return s;
}

Detection<VertexSet> find_c4(const Graph& g) { return find_c4(g, g.vertices()); }

Detection<VertexSet> find_c4(const Graph& g, VertexSet mask) {
  std::vector<int> vs = mask.to_vector();
  std::size_t n = vs.size();
  // Lexicographic order over sorted 4-tuples; the first hit is the least.
  for (std::size_t i = 0; i < n; ++i) {
    int a = vs[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      int b = vs[j];
      for (std::size_t k = j + 1; k < n; ++k) {
        int c = vs[k];
        int ab = g.adjacent(a, b), ac = g.adjacent(a, c), bc = g.adjacent(b, c);
        if (ab + ac + bc != 2) continue;
        for (std::size_t l = k + 1; l < n; ++l) {
          VertexSet s = VertexSet::of({a, b, c, vs[l]});
          bool ok = true;
          for (int v : s) {
            if (g.degree_in(v, s) != 2) {
              ok = false;
              break;
            }
          }
          if (ok) return {Outcome::found, s};
        }
      }
    }
  }
  return {Outcome::absent, std::nullopt};
}

void enumerate_induced_paths(const Graph& g, int s, int t, VertexSet allowed,
                             const std::function<bool(const std::vector<int>&)>& visitor, WorkBudget& budget) {
  std::vector<int> path{s};
  VertexSet on_path = VertexSet::single(s);
  // blocked = closed neighbourhoods of every path vertex except the last.
  std::function<bool(VertexSet)> extend = [&](VertexSet blocked) -> bool {
    budget.charge();
    int x = path.back();
    if (g.adjacent(x, t)) {
      path.push_back(t);
      bool go_on = visitor(path);
      path.pop_back();
      return go_on;
    }
    VertexSet next_blocked = blocked | g.closed_neighborhood(VertexSet::single(x));
    for (int y : (g.adj(x) & allowed) - blocked - on_path - VertexSet::single(t)) {
      path.push_back(y);
      on_path.insert(y);
      bool go_on = extend(next_blocked);
      on_path.erase(y);
      path.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  extend(VertexSet());
}

namespace {

struct SlotPath {
  std::vector<int> vertices;
  VertexSet interior;
  VertexSet reach;  // interior plus its neighbours
  int length = 0;
};

std::vector<SlotPath> slot_paths(const Graph& g, int s, int t, VertexSet allowed, WorkBudget& budget) {
  std::vector<SlotPath> out;
  enumerate_induced_paths(
      g, s, t, allowed,
      [&](const std::vector<int>& p) {
        SlotPath sp;
        sp.vertices = p;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) sp.interior.insert(p[i]);
        sp.reach = g.closed_neighborhood(sp.interior);
        sp.length = static_cast<int>(p.size()) - 1;
        out.push_back(std::move(sp));
        return true;
      },
      budget);
  return out;
}

bool compatible(const SlotPath& p, const SlotPath& q) { return !p.reach.intersects(q.interior); }

PathRecord to_record(const SlotPath& p) { return PathRecord{p.vertices}; }

std::vector<VertexSet> triangles(const Graph& g, VertexSet mask) {
  std::vector<VertexSet> out;
  for (int a : mask) {
    VertexSet na = g.adj(a) & mask;
    for (int b : na) {
      if (b <= a) continue;
      for (int c : na & g.adj(b)) {
        if (c <= b) continue;
        out.push_back(VertexSet::of({a, b, c}));
      }
    }
  }
  return out;
}

std::optional<ThreePathConfig> search_theta(const Graph& g, VertexSet mask, WorkBudget& budget) {
  for (int a : mask) {
    for (int b : mask - g.closed_neighborhood(VertexSet::single(a))) {
      if (b <= a) continue;
      // A theta needs three pairwise non-adjacent neighbours at each apex.
      if (g.degree_in(a, mask) < 3 || g.degree_in(b, mask) < 3) continue;
      VertexSet allowed = mask - VertexSet::of({a, b});
      auto ps = slot_paths(g, a, b, allowed, budget);
      for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
          budget.charge();
          if (!compatible(ps[i], ps[j])) continue;
          for (std::size_t k = j + 1; k < ps.size(); ++k) {
            budget.charge();
            if (!compatible(ps[i], ps[k]) || !compatible(ps[j], ps[k])) continue;
            ThreePathConfig cfg;
            cfg.kind = ThreePathKind::theta;
            cfg.paths = {to_record(ps[i]), to_record(ps[j]), to_record(ps[k])};
            cfg.frame = {a, b};
            return cfg;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ThreePathConfig> search_pyramid(const Graph& g, VertexSet mask, WorkBudget& budget) {
  auto tris = triangles(g, mask);
  for (int a : mask) {
    if (g.degree_in(a, mask) < 3) continue;
    for (VertexSet tri : tris) {
      if (tri.contains(a)) continue;
      if ((g.adj(a) & tri).size() > 1) continue;
      std::vector<int> b = tri.to_vector();
      std::array<std::vector<SlotPath>, 3> lists;
      bool empty_slot = false;
      for (int i = 0; i < 3 && !empty_slot; ++i) {
        VertexSet others = tri - VertexSet::single(b[i]);
        VertexSet allowed = mask - tri - VertexSet::single(a) - g.open_neighborhood(others);
        lists[i] = slot_paths(g, a, b[i], allowed, budget);
        empty_slot = lists[i].empty();
      }
      if (empty_slot) continue;
      for (const auto& p1 : lists[0]) {
        for (const auto& p2 : lists[1]) {
          budget.charge();
          if (!compatible(p1, p2)) continue;
          if (p1.length == 1 && p2.length == 1) continue;
          for (const auto& p3 : lists[2]) {
            budget.charge();
            if (!compatible(p1, p3) || !compatible(p2, p3)) continue;
            int shorts = (p1.length == 1) + (p2.length == 1) + (p3.length == 1);
            if (shorts > 1) continue;
            ThreePathConfig cfg;
            cfg.kind = ThreePathKind::pyramid;
            cfg.paths = {to_record(p1), to_record(p2), to_record(p3)};
            cfg.frame = {a, b[0], b[1], b[2]};
            return cfg;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ThreePathConfig> search_prism(const Graph& g, VertexSet mask, WorkBudget& budget) {
  auto tris = triangles(g, mask);
  for (std::size_t x = 0; x < tris.size(); ++x) {
    for (std::size_t y = x + 1; y < tris.size(); ++y) {
      VertexSet t1 = tris[x], t2 = tris[y];
      if (t1.intersects(t2)) continue;
      std::vector<int> a = t1.to_vector();
      std::vector<int> b = t2.to_vector();
      do {
        budget.charge();
        bool frame_ok = true;
        for (int i = 0; i < 3 && frame_ok; ++i) {
          for (int j = 0; j < 3; ++j) {
            if (i != j && g.adjacent(a[i], b[j])) {
              frame_ok = false;
              break;
            }
          }
        }
        if (!frame_ok) continue;
        std::array<std::vector<SlotPath>, 3> lists;
        bool empty_slot = false;
        for (int i = 0; i < 3 && !empty_slot; ++i) {
          VertexSet others = (t1 | t2) - VertexSet::of({a[i], b[i]});
          VertexSet allowed = mask - t1 - t2 - g.open_neighborhood(others);
          lists[i] = slot_paths(g, a[i], b[i], allowed, budget);
          empty_slot = lists[i].empty();
        }
        if (empty_slot) continue;
        for (const auto& p1 : lists[0]) {
          for (const auto& p2 : lists[1]) {
            budget.charge();
            if (!compatible(p1, p2)) continue;
            for (const auto& p3 : lists[2]) {
              budget.charge();
              if (!compatible(p1, p3) || !compatible(p2, p3)) continue;
              ThreePathConfig cfg;
              cfg.kind = ThreePathKind::prism;
              cfg.paths = {to_record(p1), to_record(p2), to_record(p3)};
              cfg.frame = {a[0], a[1], a[2], b[0], b[1], b[2]};
              return cfg;
            }
          }
        }
      } while (std::next_permutation(b.begin(), b.end()));
    }
  }
  return std::nullopt;
}

}  // namespace

Detection<ThreePathConfig> find_theta_prism_pyramid(const Graph& g, KindSet kinds, WorkBudget& budget) {
  return find_theta_prism_pyramid(g, kinds, budget, g.vertices());
}

Detection<ThreePathConfig> find_theta_prism_pyramid(const Graph& g, KindSet kinds, WorkBudget& budget,
                                                    VertexSet mask) {
  try {
    std::optional<ThreePathConfig> hit;
    if (kinds.theta) hit = search_theta(g, mask, budget);
    if (!hit && kinds.prism) hit = search_prism(g, mask, budget);
    if (!hit && kinds.pyramid) hit = search_pyramid(g, mask, budget);
    if (hit) return {Outcome::found, std::move(hit)};
    return {Outcome::absent, std::nullopt};
  } catch (const CapExceeded&) {
    return {Outcome::capped, std::nullopt};
  }
}

void enumerate_holes(const Graph& g, int max_len, const std::function<bool(const HoleRecord&)>& visitor,
                     WorkBudget& budget, VertexSet mask) {
  std::vector<int> path;
  bool stop = false;
  for (int v0 : mask) {
    VertexSet above = mask & VertexSet(v0 == 63 ? 0 : (~0ULL << (v0 + 1)));
    VertexSet nv = g.adj(v0) & above;
    VertexSet allowed = above - g.adj(v0);
    for (int u : nv) {
      for (int w : nv) {
        if (w <= u || g.adjacent(u, w)) continue;
        // Path u .. w through `allowed`; the hole is v0 + path.
        path.assign(1, u);
        VertexSet on_path = VertexSet::single(u);
        std::function<void(VertexSet)> extend = [&](VertexSet blocked) {
          budget.charge();
          int x = path.back();
          if (g.adjacent(x, w)) {
            path.push_back(w);
            std::vector<int> cyc{v0};
            cyc.insert(cyc.end(), path.begin(), path.end());
            path.pop_back();
            if (!visitor(HoleRecord{std::move(cyc)})) stop = true;
            return;
          }
          // Closing later needs at least w and v0 beyond the current path.
          if (static_cast<int>(path.size()) + 2 >= max_len) return;
          VertexSet next_blocked = blocked | g.closed_neighborhood(VertexSet::single(x));
          for (int y : (g.adj(x) & allowed) - blocked - on_path) {
            path.push_back(y);
            on_path.insert(y);
            extend(next_blocked);
            on_path.erase(y);
            path.pop_back();
            if (stop) return;
          }
        };
        extend(VertexSet());
        if (stop) return;
      }
    }
  }
}

std::vector<HoleRecord> all_holes(const Graph& g, VertexSet mask, WorkBudget& budget, int max_len) {
  std::vector<HoleRecord> out;
  enumerate_holes(
      g, max_len,
      [&](const HoleRecord& h) {
        out.push_back(h);
        return true;
      },
      budget, mask);
  return out;
}

Detection<WheelRecord> find_even_wheel(const Graph& g, WorkBudget& budget) {
  return find_even_wheel(g, budget, g.vertices());
}

Detection<WheelRecord> find_even_wheel(const Graph& g, WorkBudget& budget, VertexSet mask) {
  std::optional<WheelRecord> hit;
  try {
    enumerate_holes(
        g, kMaxVertices,
        [&](const HoleRecord& h) {
          VertexSet hs = h.members();
          for (int x : mask - hs) {
            VertexSet spokes = g.adj(x) & hs;
            int k = spokes.size();
            if (k >= 4 && k % 2 == 0) {
              hit = WheelRecord{h, x, spokes};
              return false;
            }
          }
          return true;
        },
        budget, mask);
  } catch (const CapExceeded&) {
    return {Outcome::capped, std::nullopt};
  }
  if (hit) return {Outcome::found, std::move(hit)};
  return {Outcome::absent, std::nullopt};
}

MembershipResult is_c4free_odd_signable(const Graph& g) {
  WorkBudget budget;
  return is_c4free_odd_signable(g, budget, g.vertices());
}

MembershipResult is_c4free_odd_signable(const Graph& g, WorkBudget& budget) {
  return is_c4free_odd_signable(g, budget, g.vertices());
}

MembershipResult is_c4free_odd_signable(const Graph& g, WorkBudget& budget, VertexSet mask) {
  MembershipResult r;
  if (auto c4 = find_c4(g, mask); c4.found()) {
    r.outcome = Outcome::found;
    r.violation = Violation::c4;
    r.c4 = c4.witness;
    return r;
  }
  bool capped = false;
  for (ThreePathKind k : {ThreePathKind::theta, ThreePathKind::prism}) {
    auto d = find_theta_prism_pyramid(g, KindSet::only(k), budget, mask);
    if (d.outcome == Outcome::capped) {
      capped = true;
      break;
    }
    if (d.found()) {
      r.outcome = Outcome::found;
      r.violation = k == ThreePathKind::theta ? Violation::theta : Violation::prism;
      r.config = d.witness;
      return r;
    }
  }
  if (!capped) {
    auto ew = find_even_wheel(g, budget, mask);
    if (ew.found()) {
      r.outcome = Outcome::found;
      r.violation = Violation::even_wheel;
      r.wheel = ew.witness;
      return r;
    }
    capped = ew.outcome == Outcome::capped;
  }
  r.outcome = capped ? Outcome::capped : Outcome::absent;
  return r;
}

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

void add_edge(EdgeSet& es, int u, int v) { es.emplace(std::min(u, v), std::max(u, v)); }

bool edges_match(const Graph& g, VertexSet members, const EdgeSet& expected) {
  EdgeSet actual;
  for (auto e : g.edges_in(members)) actual.insert(e);
  return actual == expected;
}

}  // namespace

bool validate_three_path(const Graph& g, const ThreePathConfig& cfg) {
  EdgeSet expected;
  for (const auto& p : cfg.paths) {
    if (!is_induced_path(g, p.vertices)) return false;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) add_edge(expected, p.vertices[i], p.vertices[i + 1]);
  }
  const auto& f = cfg.frame;
  switch (cfg.kind) {
    case ThreePathKind::theta: {
      if (f.size() != 2) return false;
      for (const auto& p : cfg.paths) {
        if (p.from() != f[0] || p.to() != f[1] || p.length() < 2) return false;
      }
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (cfg.paths[i].interior().intersects(cfg.paths[j].interior())) return false;
      break;
    }
    case ThreePathKind::pyramid: {
      if (f.size() != 4) return false;
      int shorts = 0;
      for (int i = 0; i < 3; ++i) {
        const auto& p = cfg.paths[i];
        if (p.from() != f[0] || p.to() != f[i + 1] || p.length() < 1) return false;
        shorts += p.length() == 1;
      }
      if (shorts > 1) return false;
      VertexSet apex = VertexSet::single(f[0]);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if ((cfg.paths[i].members() - apex).intersects(cfg.paths[j].members() - apex)) return false;
      add_edge(expected, f[1], f[2]);
      add_edge(expected, f[1], f[3]);
      add_edge(expected, f[2], f[3]);
      break;
    }
    case ThreePathKind::prism: {
      if (f.size() != 6) return false;
      for (int i = 0; i < 3; ++i) {
        const auto& p = cfg.paths[i];
        if (p.from() != f[i] || p.to() != f[i + 3] || p.length() < 1) return false;
      }
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (cfg.paths[i].members().intersects(cfg.paths[j].members())) return false;
      for (int base : {0, 3}) {
        add_edge(expected, f[base], f[base + 1]);
        add_edge(expected, f[base], f[base + 2]);
        add_edge(expected, f[base + 1], f[base + 2]);
      }
      break;
    }
  }
  return edges_match(g, cfg.members(), expected);
}

bool validate_wheel(const Graph& g, const WheelRecord& w) {
  if (!is_hole(g, w.hole.cycle)) return false;
  VertexSet hs = w.hole.members();
  if (w.hub < 0 || hs.contains(w.hub)) return false;
  return (g.adj(w.hub) & hs) == w.spokes && w.spokes.size() >= 3;
}

}  // namespace oddsign
