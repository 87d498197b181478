#include "oddsign/wheel.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "oddsign/errors.hpp"

namespace oddsign {

const char* to_string(WheelKind k) {
  switch (k) {
    case WheelKind::universal:
      return "universal";
    case WheelKind::twin:
      return "twin";
    case WheelKind::short_pyramid:
      return "short_pyramid";
    case WheelKind::proper:
      return "proper";
  }
  return "?";
}

const char* to_string(ForcerKind k) {
  switch (k) {
    case ForcerKind::proper_wheel:
      return "proper_wheel";
    case ForcerKind::short_pyramid:
      return "short_pyramid";
    case ForcerKind::twin_wheel:
      return "twin_wheel";
  }
  return "?";
}

namespace {

std::vector<int> spoke_positions(const HoleRecord& h, VertexSet spokes) {
  std::vector<int> pos;
  for (int i = 0; i < h.length(); ++i)
    if (spokes.contains(h.cycle[i])) pos.push_back(i);
  return pos;
}

// Vertices of the hole from position i forward to position j, inclusive.
std::vector<int> arc(const HoleRecord& h, int i, int j) {
  std::vector<int> out;
  int k = h.length();
  for (int p = i;; p = (p + 1) % k) {
    out.push_back(h.cycle[p]);
    if (p == j) break;
  }
  return out;
}

}  // namespace

WheelClass classify_wheel(const Graph& g, const WheelRecord& w) {
  WheelClass wc;
  const HoleRecord& h = w.hole;
  VertexSet hs = h.members();
  VertexSet spokes = g.adj(w.hub) & hs;
  auto pos = spoke_positions(h, spokes);
  int m = static_cast<int>(pos.size());
  for (int i = 0; i < m; ++i) wc.sectors.push_back(PathRecord{arc(h, pos[i], pos[(i + 1) % m])});

  if (spokes == hs) {
    wc.kind = WheelKind::universal;
    return wc;
  }
  if (m == 3) {
    std::vector<int> s = spokes.to_vector();
    int adjacent_pairs = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) adjacent_pairs += g.adjacent(s[i], s[j]);
    if (adjacent_pairs == 2) {
      wc.kind = WheelKind::twin;
      for (int v : s) {
        if ((g.adj(v) & spokes).size() == 2) wc.clone = v;
      }
      return wc;
    }
    if (adjacent_pairs == 1) {
      wc.kind = WheelKind::short_pyramid;
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          if (g.adjacent(s[i], s[j])) {
            wc.x1 = s[i];
            wc.x2 = s[j];
            wc.y = s[3 - i - j];
          }
        }
      }
      return wc;
    }
  }
  wc.kind = WheelKind::proper;
  return wc;
}

Richness twin_richness(const Graph& g, VertexSet mask, const HoleRecord& hole, int x, int x2) {
  Richness r;
  VertexSet target = hole.members() - g.closed_neighborhood(VertexSet::single(x));
  VertexSet not_x2_side = g.adj(x2) - VertexSet::single(x);
  VertexSet not_x_side = g.adj(x) - VertexSet::single(x2);
  r.x_rich = path_avoiding(g, x, target, not_x2_side, mask).has_value();
  r.x2_rich = path_avoiding(g, x2, target, not_x_side, mask).has_value();
  r.terminal = !(r.x_rich && r.x2_rich);
  return r;
}

bool verify_certificate(const Graph& g, VertexSet mask, const CutsetCertificate& cert) {
  if (cert.side_a.empty() || cert.side_b.empty()) return false;
  if (!cert.cutset.subset_of(mask) || !cert.side_a.subset_of(mask) || !cert.side_b.subset_of(mask)) return false;
  if (cert.side_a.intersects(cert.side_b)) return false;
  if (cert.cutset.intersects(cert.side_a | cert.side_b)) return false;
  int ca = -1, cb = -1;
  auto comps = components(g, mask - cert.cutset);
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
    if (cert.side_a.subset_of(comps[i])) ca = i;
    if (cert.side_b.subset_of(comps[i])) cb = i;
  }
  return ca >= 0 && cb >= 0 && ca != cb;
}

namespace {

CutsetCertificate proper_cutset(const Graph& g, VertexSet mask, const ForcerRecord& f) {
  const HoleRecord& h = f.hole;
  int x = f.hub;
  VertexSet hs = h.members();
  VertexSet spokes = g.adj(x) & hs;
  auto pos = spoke_positions(h, spokes);
  int m = static_cast<int>(pos.size());
  int k = h.length();
  int qi = -1;
  for (int i = 0; i < m; ++i) {
    int gap = (pos[(i + 1) % m] - pos[i] + k) % k;
    if (gap >= 2) {
      qi = i;
      break;
    }
  }
  if (qi < 0) throw AssertionFailure("proper wheel without a long sector");
  int p1 = pos[qi], p2 = pos[(qi + 1) % m];
  int x1 = h.cycle[p1];
  VertexSet q = VertexSet::from(arc(h, p1, p2));
  VertexSet q_interior = q - VertexSet::of({x1, h.cycle[p2]});
  // Walk H - x1 from x2 away from Q, counting spokes including both ends.
  VertexSet w_set;
  int count = 0;
  for (int p = p2; h.cycle[p] != x1; p = (p + 1) % k) {
    int v = h.cycle[p];
    if (spokes.contains(v)) {
      ++count;
      if (count % 2 == 0) w_set.insert(v);
    }
  }
  VertexSet z = hs - q - spokes;
  VertexSet n_prime = (g.adj(x) & mask) - w_set;
  CutsetCertificate cert;
  cert.cutset = n_prime | VertexSet::single(x);
  cert.side_a = q_interior;
  cert.side_b = w_set | z;
  cert.rule = "proper-wheel";
  return cert;
}

CutsetCertificate universal_cutset(const Graph& g, VertexSet mask, const ForcerRecord& f) {
  int x = f.hub;
  VertexSet closed = g.closed_neighborhood(VertexSet::single(x)) & mask;
  CutsetCertificate cert;
  if (closed == mask) {
    VertexSet hs = f.hole.members();
    for (int a : hs) {
      for (int b : (hs - g.adj(a)) - VertexSet::range(a + 1)) {
        cert.cutset = closed - VertexSet::of({a, b});
        cert.side_a = VertexSet::single(a);
        cert.side_b = VertexSet::single(b);
        cert.rule = "universal-wheel:closed";
        return cert;
      }
    }
    throw AssertionFailure("universal wheel hole has no non-adjacent pair");
  }
  auto comps = components(g, mask - closed);
  VertexSet c = comps.front();
  for (int a : f.hole.members()) {
    if (!g.adj(a).intersects(c)) {
      cert.cutset = closed - VertexSet::single(a);
      cert.side_a = VertexSet::single(a);
      cert.side_b = c;
      cert.rule = "universal-wheel:component";
      return cert;
    }
  }
  cert.cutset = closed;
  cert.side_b = c;
  cert.rule = "universal-wheel:component";
  return cert;  // side_a empty: fails verification below
}

CutsetCertificate short_pyramid_cutset(const Graph& g, VertexSet mask, const ForcerRecord& f) {
  WheelClass wc = classify_wheel(g, WheelRecord{f.hole, f.hub, g.adj(f.hub) & f.hole.members()});
  VertexSet s = (g.adj(f.hub) | g.adj(wc.y)) & mask;
  VertexSet h1, h2;
  for (const auto& sec : wc.sectors) {
    bool touches_y = sec.from() == wc.y || sec.to() == wc.y;
    if (!touches_y) continue;
    int other = sec.from() == wc.y ? sec.to() : sec.from();
    if (other == wc.x1) h1 = sec.members();
    if (other == wc.x2) h2 = sec.members();
  }
  CutsetCertificate cert;
  cert.cutset = s;
  cert.side_a = h1 - s;
  cert.side_b = h2 - s;
  cert.rule = "short-pyramid";
  return cert;
}

CutsetCertificate twin_cutset(const Graph& g, VertexSet mask, const ForcerRecord& f) {
  VertexSet closed = g.closed_neighborhood(VertexSet::single(f.hub)) & mask;
  CutsetCertificate cert;
  cert.cutset = closed - VertexSet::single(f.clone);
  cert.side_a = VertexSet::single(f.clone);
  cert.side_b = f.hole.members() - closed;
  cert.rule = "twin-wheel";
  return cert;
}

}  // namespace

CutsetCertificate forcer_cutset(const Graph& g, VertexSet mask, const ForcerRecord& f) {
  CutsetCertificate cert;
  switch (f.kind) {
    case ForcerKind::proper_wheel:
      cert = f.universal ? universal_cutset(g, mask, f) : proper_cutset(g, mask, f);
      break;
    case ForcerKind::short_pyramid:
      cert = short_pyramid_cutset(g, mask, f);
      break;
    case ForcerKind::twin_wheel:
      cert = twin_cutset(g, mask, f);
      break;
  }
  if (!verify_certificate(g, mask, cert)) {
    throw AssertionFailure("forcer cutset verification failed (" + cert.rule + ")",
                           "cutset=" + to_string(cert.cutset) + " side_a=" + to_string(cert.side_a) +
                               " side_b=" + to_string(cert.side_b));
  }
  return cert;
}

std::vector<WheelRecord> enumerate_wheels(const Graph& g, VertexSet mask, WorkBudget& budget) {
  std::vector<WheelRecord> out;
  enumerate_holes(
      g, kMaxVertices,
      [&](const HoleRecord& h) {
        VertexSet hs = h.members();
        for (int x : mask - hs) {
          VertexSet spokes = g.adj(x) & hs;
          if (spokes.size() >= 3) out.push_back(WheelRecord{h, x, spokes});
        }
        return true;
      },
      budget, mask);
  return out;
}

std::vector<ForcerRecord> enumerate_forcers(const Graph& g, VertexSet mask, ForcerFamily family, WorkBudget& budget) {
  std::vector<ForcerRecord> out;
  std::set<std::tuple<std::vector<int>, std::uint64_t, int>> seen;
  auto emit = [&](ForcerRecord f) {
    auto key = std::make_tuple(f.hole.cycle, f.center.bits(), static_cast<int>(f.kind));
    if (seen.insert(key).second) out.push_back(std::move(f));
  };
  for (const auto& w : enumerate_wheels(g, mask, budget)) {
    budget.charge();
    WheelClass wc = classify_wheel(g, w);
    if (family == ForcerFamily::strong) {
      if (wc.proper()) {
        ForcerRecord f;
        f.hole = w.hole;
        f.hub = w.hub;
        f.center = VertexSet::single(w.hub);
        f.kind = ForcerKind::proper_wheel;
        f.universal = wc.kind == WheelKind::universal;
        emit(std::move(f));
      } else if (wc.kind == WheelKind::short_pyramid) {
        ForcerRecord f;
        f.hole = w.hole;
        f.hub = w.hub;
        f.y = wc.y;
        f.center = VertexSet::of({w.hub, wc.y});
        f.kind = ForcerKind::short_pyramid;
        emit(std::move(f));
      }
      continue;
    }
    if (wc.kind != WheelKind::twin) continue;
    Richness r = twin_richness(g, mask, w.hole, w.hub, wc.clone);
    if (!r.x2_rich) {
      ForcerRecord f;
      f.hole = w.hole;
      f.hub = w.hub;
      f.clone = wc.clone;
      f.center = VertexSet::single(w.hub);
      f.kind = ForcerKind::twin_wheel;
      emit(std::move(f));
    }
    if (!r.x_rich && r.x2_rich) {
      // The symmetric wheel: hub and clone trade places.
      std::vector<int> cyc = w.hole.cycle;
      std::replace(cyc.begin(), cyc.end(), wc.clone, w.hub);
      ForcerRecord f;
      f.hole = canonical_hole(std::move(cyc));
      f.hub = wc.clone;
      f.clone = w.hub;
      f.center = VertexSet::single(wc.clone);
      f.kind = ForcerKind::twin_wheel;
      f.swapped = true;
      emit(std::move(f));
    }
  }
  return out;
}

PoorImplication check_u_x_poor_predicate(const Graph& g, VertexSet mask, const HoleRecord& hole, int x, int u) {
  PoorImplication r;
  WheelRecord w{hole, x, g.adj(x) & hole.members()};
  WheelClass wc = classify_wheel(g, w);
  if (wc.kind != WheelKind::twin || !mask.contains(u) || hole.members().contains(u) || u == x) return r;
  VertexSet hx = hole.members() | VertexSet::single(x);
  VertexSet ends = w.spokes - VertexSet::single(wc.clone);
  for (int x1 : ends) {
    // x1' is the hole neighbour of x1 other than the clone.
    VertexSet x1p = (g.adj(x1) & hole.members()) - VertexSet::single(wc.clone);
    if (x1p.size() != 1) continue;
    if ((g.adj(u) & hx) == (VertexSet::of({x, x1}) | x1p)) r.hypothesis = true;
  }
  if (!r.hypothesis) return r;
  r.conclusion = !twin_richness(g, mask, hole, x, wc.clone).x2_rich;
  return r;
}

namespace {

std::optional<PathRecord> shaped_path(const Graph& g, VertexSet mask, VertexSet hx, VertexSet spokes, int root,
                                      VertexSet hole) {
  VertexSet outside = mask - hx;
  VertexSet far_hole = hole - spokes;
  VertexSet clean, targets;
  std::vector<int> starts;
  for (int v : outside) {
    VertexSet att = g.adj(v) & hx;
    if (att.empty()) clean.insert(v);
    if (att == VertexSet::single(root)) starts.push_back(v);
    if (att.size() == 2 && att.subset_of(far_hole) && g.adjacent(att.min(), att.max())) targets.insert(v);
  }
  for (int p1 : starts) {
    auto p = path_avoiding(g, p1, targets, VertexSet(), clean | targets | VertexSet::single(p1));
    if (p) {
      // Targets are endpoints only; reject paths that pass through one.
      bool ok = true;
      for (std::size_t i = 0; i + 1 < p->vertices.size(); ++i)
        if (targets.contains(p->vertices[i])) ok = false;
      if (ok) return p;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<PathRecord, PathRecord>> check_paths_shapes_predicate(const Graph& g, VertexSet mask,
                                                                              const HoleRecord& hole, int x) {
  WheelRecord w{hole, x, g.adj(x) & hole.members()};
  WheelClass wc = classify_wheel(g, w);
  if (wc.kind != WheelKind::twin) return std::nullopt;
  VertexSet hx = hole.members() | VertexSet::single(x);
  auto p = shaped_path(g, mask, hx, w.spokes, x, hole.members());
  auto q = shaped_path(g, mask, hx, w.spokes, wc.clone, hole.members());
  if (!p || !q) return std::nullopt;
  return std::make_pair(*p, *q);
}

}  // namespace oddsign
