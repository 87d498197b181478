#include "oddsign/separation.hpp"

#include <stdexcept>

namespace oddsign {

bool is_separation(const Graph& g, VertexSet mask, const Separation& s) {
  if (s.a.intersects(s.c) || s.a.intersects(s.b) || s.c.intersects(s.b)) return false;
  if ((s.a | s.b | s.c) != mask) return false;
  return is_anticomplete(g, s.a, s.b);
}

bool is_clique_star(const Graph& g, VertexSet x, VertexSet k) {
  if (k.empty() || !is_clique(g, k) || !k.subset_of(x)) return false;
  return x.subset_of(g.closed_neighborhood(k));
}

bool crosses(const Separation& s1, const Separation& s2) {
  const Separation* s[2] = {&s1, &s2};
  for (int i = 0; i < 2; ++i) {
    const Separation& si = *s[i];
    const Separation& so = *s[1 - i];
    if (si.x().subset_of(so.x()) && so.y().subset_of(si.y())) return false;
    if (si.x().subset_of(so.y()) && so.x().subset_of(si.y())) return false;
  }
  return true;
}

SkewResult is_skewed(const Separation& s, const WeightAssignment& w, const Rational& eps) {
  Rational wa = w.sum(s.a), wb = w.sum(s.b);
  bool a_light = wa < eps, b_light = wb < eps;
  SkewResult r;
  r.skewed = a_light || b_light;
  r.normalized = s;
  if (!r.skewed) return r;
  bool swap = false;
  if (a_light && b_light) {
    if (wb < wa) {
      swap = true;
    } else if (wb == wa) {
      int ma = s.a.empty() ? 64 : s.a.min();
      int mb = s.b.empty() ? 64 : s.b.min();
      swap = mb < ma;
    }
  } else {
    swap = b_light;
  }
  if (swap) r.normalized = s.flipped();
  return r;
}

std::size_t heaviest(const std::vector<VertexSet>& sets, const WeightAssignment& w, bool* tie) {
  std::size_t best = 0;
  Rational best_w = -1;
  int shared = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Rational wi = w.sum(sets[i]);
    bool better = false;
    if (wi > best_w) {
      better = true;
      shared = 1;
    } else if (wi == best_w) {
      ++shared;
      const VertexSet& cur = sets[best];
      if (sets[i].size() < cur.size() || (sets[i].size() == cur.size() && sets[i].min() < cur.min())) better = true;
    }
    if (better) {
      best = i;
      best_w = wi;
    }
  }
  if (tie) *tie = shared > 1;
  return best;
}

CanonicalStarSeparation canonical_star_separation(const Graph& g, VertexSet mask, const WeightAssignment& w,
                                                  VertexSet k) {
  if (k.empty() || !k.subset_of(mask) || !is_clique(g, k))
    throw std::invalid_argument("canonical_star_separation: centre is not a clique in the mask");
  CanonicalStarSeparation out;
  out.center = k;
  VertexSet closed = g.closed_neighborhood(k) & mask;
  auto comps = components(g, mask - closed);
  VertexSet b;
  if (!comps.empty()) {
    std::size_t i = heaviest(comps, w, &out.tie);
    b = comps[i];
    Rational top = w.sum(b);
    for (const auto& comp : comps)
      if (w.sum(comp) == top) out.tied.push_back(comp);
  }
  VertexSet c = k;
  for (int v : closed - k)
    if (g.adj(v).intersects(b)) c.insert(v);
  out.sep = Separation{mask - b - c, c, b, k};
  return out;
}

std::vector<VertexSet> cliques_of_size(const Graph& g, VertexSet mask, int size_k) {
  std::vector<VertexSet> out;
  if (size_k <= 0) return out;
  std::vector<int> stack;
  auto grow = [&](auto&& self, VertexSet cand) -> void {
    if (static_cast<int>(stack.size()) == size_k) {
      out.push_back(VertexSet::from(stack));
      return;
    }
    for (int v : cand) {
      stack.push_back(v);
      self(self, (cand & g.adj(v)) - VertexSet::range(v + 1));
      stack.pop_back();
    }
  };
  grow(grow, mask);
  return out;
}

bool is_minimal_clique_cutset(const Graph& g, VertexSet mask, VertexSet c) {
  if (c.empty() || !c.subset_of(mask) || !is_clique(g, c)) return false;
  auto comps = components(g, mask - c);
  if (comps.size() < 2) return false;
  for (int v : c)
    for (const auto& comp : comps)
      if (!g.adj(v).intersects(comp)) return false;
  return true;
}

std::vector<VertexSet> minimal_clique_cutsets(const Graph& g, VertexSet mask, int size_k) {
  std::vector<VertexSet> out;
  for (VertexSet c : cliques_of_size(g, mask, size_k))
    if (is_minimal_clique_cutset(g, mask, c)) out.push_back(c);
  return out;
}

Separation minimal_clique_separation(const Graph& g, VertexSet mask, const WeightAssignment& w, VertexSet c) {
  if (!is_minimal_clique_cutset(g, mask, c))
    throw std::invalid_argument("minimal_clique_separation: " + to_string(c) + " is not a minimal clique cutset");
  auto comps = components(g, mask - c);
  VertexSet b = comps[heaviest(comps, w)];
  return Separation{mask - b - c, c, b, c};
}

BigInt f_bound(int k, int delta) {
  BigInt sum = 0;
  for (int j = 0; j <= k - 1; ++j) {
    BigInt binom = 1;
    for (int t = 0; t < j; ++t) binom = binom * (delta - t) / (t + 1);
    sum += binom;
  }
  return BigInt(k + delta * k) * sum + 1;
}

std::vector<int> partition_centers(const Graph& g, const std::vector<VertexSet>& centers, int k, int delta) {
  if (g.max_degree() > delta) throw std::invalid_argument("partition_centers: degree exceeds delta");
  std::vector<int> cls(centers.size(), -1);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (centers[i].size() > k) throw std::invalid_argument("partition_centers: centre larger than k");
    VertexSet reach = g.closed_neighborhood(centers[i]);
    for (std::size_t c = 0;; ++c) {
      if (c == members.size()) members.emplace_back();
      bool clash = false;
      for (std::size_t j : members[c])
        if (reach.intersects(centers[j])) clash = true;
      if (!clash) {
        members[c].push_back(i);
        cls[i] = static_cast<int>(c);
        break;
      }
    }
  }
  return cls;
}

std::optional<StarCutset> find_star_cutset(const Graph& g, VertexSet mask) {
  for (int x : mask) {
    VertexSet closed = g.closed_neighborhood(VertexSet::single(x)) & mask;
    if (components(g, mask - closed).size() >= 2) return StarCutset{x, closed};
  }
  for (int x : mask) {
    VertexSet closed = g.closed_neighborhood(VertexSet::single(x)) & mask;
    VertexSet rest = mask - closed;
    VertexSet open = closed - VertexSet::single(x);
    if (rest.empty()) {
      for (int a : open) {
        VertexSet non = open - g.adj(a) - VertexSet::single(a);
        if (!non.empty()) return StarCutset{x, closed - VertexSet::of({a, non.min()})};
      }
      continue;
    }
    for (int t : open)
      if (!g.adj(t).intersects(rest)) return StarCutset{x, closed - VertexSet::single(t)};
  }
  return std::nullopt;
}

bool has_clique_cutset(const Graph& g, VertexSet mask) {
  if (!is_connected(g, mask)) return true;
  for (int k = 1; k <= mask.size(); ++k) {
    auto cs = cliques_of_size(g, mask, k);
    if (cs.empty()) break;
    for (VertexSet c : cs)
      if (components(g, mask - c).size() >= 2) return true;
  }
  return false;
}

}  // namespace oddsign
