#include "oddsign/laminar.hpp"

#include <stdexcept>

#include "oddsign/errors.hpp"

namespace oddsign {

LaminarCheck is_laminar(const std::vector<Separation>& seps) {
  for (std::size_t i = 0; i < seps.size(); ++i)
    for (std::size_t j = i + 1; j < seps.size(); ++j)
      if (crosses(seps[i], seps[j])) return LaminarCheck{false, std::pair{i, j}};
  return {};
}

namespace {

bool below(const Separation& s, const Separation& t) { return s.x().subset_of(t.x()) && t.y().subset_of(s.y()); }

std::string describe(const Separation& s) {
  return "(" + to_string(s.a) + ", " + to_string(s.c) + ", " + to_string(s.b) + ")";
}

}  // namespace

std::optional<std::string> bijection_defect(const LaminarDecomposition& dec) {
  for (std::size_t e = 0; e < dec.td.edges.size(); ++e) {
    Separation got = edge_separation(dec.td, static_cast<int>(e));
    if (!got.same_sets(dec.seps[e]))
      return "edge " + std::to_string(e) + " gives " + describe(got) + " instead of " + describe(dec.seps[e]);
  }
  for (std::size_t i = 0; i < dec.seps.size(); ++i)
    for (std::size_t j = i + 1; j < dec.seps.size(); ++j)
      if (dec.seps[i].same_sets(dec.seps[j])) return "separation " + std::to_string(i) + " repeats";
  return std::nullopt;
}

LaminarDecomposition build_tree_decomposition(const Graph& g, VertexSet mask, const std::vector<Separation>& seps) {
  auto check = is_laminar(seps);
  if (!check.laminar)
    throw std::invalid_argument("separations " + std::to_string(check.crossing->first) + " and " +
                                std::to_string(check.crossing->second) + " cross");
  std::size_t m = seps.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_separation(g, mask, seps[i])) throw std::invalid_argument("not a separation: " + describe(seps[i]));
    for (std::size_t j = i + 1; j < m; ++j)
      if (seps[i].same_sets(seps[j])) throw std::invalid_argument("repeated separation " + describe(seps[i]));
  }
  LaminarDecomposition dec;
  dec.seps = seps;
  dec.parent.assign(m + 1, 0);
  dec.parent[0] = -1;
  for (std::size_t i = 0; i < m; ++i) {
    int best = -1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i || !below(seps[i], seps[j])) continue;
      if (best < 0 || below(seps[j], seps[best])) best = static_cast<int>(j);
    }
    dec.parent[i + 1] = best < 0 ? 0 : best + 1;
  }
  dec.td.bags.assign(m + 1, VertexSet{});
  dec.td.bags[0] = mask;
  for (std::size_t i = 0; i < m; ++i) dec.td.bags[i + 1] = seps[i].x();
  for (std::size_t i = 0; i < m; ++i) {
    dec.td.bags[dec.parent[i + 1]] -= seps[i].a;
    dec.td.edges.emplace_back(static_cast<int>(i + 1), dec.parent[i + 1]);
  }
  if (auto bad = tree_decomposition_defect(g, mask, dec.td))
    throw AssertionFailure("laminar tree decomposition violates an axiom", *bad);
  if (auto bad = bijection_defect(dec)) throw AssertionFailure("laminar tree decomposition edge bijection failed", *bad);
  return dec;
}

CentralBag central_bag(const Graph& g, VertexSet mask, const WeightAssignment& w, const std::vector<Separation>& seps,
                       const Rational& eps) {
  CentralBag out;
  std::vector<Separation> norm;
  out.eps0 = 0;
  for (const auto& s : seps) {
    if (!s.center) throw std::invalid_argument("separation without a centre: " + describe(s));
    auto sk = is_skewed(s, w, eps);
    if (!sk.skewed) throw std::invalid_argument("separation is not skewed: " + describe(s));
    norm.push_back(sk.normalized);
    Rational wc = w.sum(s.c);
    if (wc > out.eps0) out.eps0 = wc;
  }
  out.arborescence_hypothesis = eps + out.eps0 < Rational(1, 2);
  out.dec = build_tree_decomposition(g, mask, norm);

  // Edge i runs from node i + 1 (whose side is a) to its parent.
  int nodes = out.dec.td.nodes();
  std::vector<int> outdeg(nodes, 0);
  for (std::size_t i = 0; i < norm.size(); ++i) {
    Separation got = edge_separation(out.dec.td, static_cast<int>(i));
    if (got.a == norm[i].a)
      ++outdeg[i + 1];
    else
      ++outdeg[out.dec.parent[i + 1]];
  }
  out.root = -1;
  for (int t = 0; t < nodes; ++t)
    if (outdeg[t] == 0) {
      ++out.sinks;
      if (out.root < 0) out.root = t;
    }
  if (out.sinks != 1)
    throw AssertionFailure("skew orientation is not an in-arborescence", std::to_string(out.sinks) + " sinks");
  out.beta = out.dec.td.bags[out.root];
  for (const auto& s : norm)
    if (out.beta.intersects(s.a))
      throw AssertionFailure("central bag is not perpendicular", "meets light side " + to_string(s.a));
  out.connected = is_connected(g, out.beta);

  out.w_x = w.restricted(out.beta);
  out.anchor.assign(norm.size(), -1);
  std::vector<VertexSet> seen_centres;
  out.unique_centers = true;
  for (std::size_t i = 0; i < norm.size(); ++i) {
    VertexSet k = *norm[i].center;
    for (VertexSet other : seen_centres)
      if (other == k) out.unique_centers = false;
    seen_centres.push_back(k);
    if (out.dec.parent[i + 1] != out.root) continue;
    out.anchor[i] = k.min();
    out.w_x.add(k.min(), w.sum(norm[i].a));
  }
  if (out.w_x.total() != w.sum(mask))
    throw AssertionFailure("reweighting lost weight", format_rational(out.w_x.total()));
  int delta = g.max_degree_in(mask);
  out.weight_max_bound = out.w_x.max() <= w.max() + Rational(BigInt(1) << delta) * eps;
  return out;
}

VertexSet lift_separator(const Graph& g, VertexSet parent_mask, VertexSet beta, VertexSet y) {
  return ball(g, y, 2, beta) & parent_mask;
}

}  // namespace oddsign
