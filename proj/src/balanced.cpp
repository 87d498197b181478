#include "oddsign/balanced.hpp"

#include <algorithm>
#include <unordered_set>

namespace oddsign {

namespace {

struct CoverSearch {
  std::vector<std::pair<int, VertexSet>> options;  // centre, covered part of y
  WorkBudget* budget;
  std::unordered_set<std::uint64_t> failed[65];
  std::vector<int> chosen;

  bool run(VertexSet left, int depth) {
    if (left.empty()) return true;
    if (depth == 0) return false;
    int widest = 0;
    for (const auto& [v, cov] : options) widest = std::max(widest, (cov & left).size());
    if (widest == 0 || (left.size() + widest - 1) / widest > depth) return false;
    if (failed[depth].count(left.bits())) return false;
    budget->charge();
    int pivot = left.min();
    for (const auto& [v, cov] : options) {
      if (!cov.contains(pivot)) continue;
      chosen.push_back(v);
      if (run(left - cov, depth - 1)) return true;
      chosen.pop_back();
    }
    failed[depth].insert(left.bits());
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> bounded_cover(const Graph& g, VertexSet mask, VertexSet y, int d,
                                              const std::vector<int>& hints, WorkBudget& budget) {
  if (!y.subset_of(mask)) return std::nullopt;
  if (y.empty()) return std::vector<int>{};
  if (d <= 0) return std::nullopt;

  VertexSet covered;
  std::vector<int> picked;
  for (int v : hints) {
    if (!mask.contains(v) || static_cast<int>(picked.size()) == d) break;
    picked.push_back(v);
    covered |= ball(g, VertexSet::single(v), d, mask);
  }
  if (y.subset_of(covered)) return picked;

  std::vector<std::pair<int, VertexSet>> options;
  for (int v : mask) {
    VertexSet cov = ball(g, VertexSet::single(v), d, mask) & y;
    if (!cov.empty()) options.emplace_back(v, cov);
  }
  // Drop options whose coverage is inside another's, keeping the first of equals.
  std::vector<std::pair<int, VertexSet>> kept;
  for (std::size_t i = 0; i < options.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < options.size() && !dominated; ++j) {
      if (i == j || !options[i].second.subset_of(options[j].second)) continue;
      dominated = options[i].second != options[j].second || j < i;
    }
    if (!dominated) kept.push_back(options[i]);
  }

  std::vector<int> greedy;
  VertexSet left = y;
  while (!left.empty() && static_cast<int>(greedy.size()) < d) {
    auto best = std::max_element(kept.begin(), kept.end(), [&](const auto& p, const auto& q) {
      return (p.second & left).size() < (q.second & left).size();
    });
    greedy.push_back(best->first);
    left -= best->second;
  }
  if (left.empty()) return greedy;

  CoverSearch search{kept, &budget, {}, {}};
  if (search.run(y, std::min(d, y.size()))) return search.chosen;
  return std::nullopt;
}

std::optional<std::vector<int>> bounded_cover(const Graph& g, VertexSet mask, VertexSet y, int d) {
  WorkBudget budget;
  return bounded_cover(g, mask, y, d, {}, budget);
}

VertexSet prune_balanced(const Graph& g, VertexSet mask, const WeightAssignment& w, VertexSet y, const Rational& c) {
  std::vector<int> order = y.to_vector();
  std::stable_sort(order.begin(), order.end(),
                   [&](int u, int v) { return (g.adj(u) & mask).size() < (g.adj(v) & mask).size(); });
  for (int v : order) {
    VertexSet trial = y - VertexSet::single(v);
    bool ok = true;
    for (VertexSet comp : components(g, mask - trial))
      if (w.sum(comp) > c) {
        ok = false;
        break;
      }
    if (ok) y = trial;
  }
  return y;
}

BalancedAudit verify_balanced_separator(const Graph& g, VertexSet mask, const WeightAssignment& w, VertexSet y,
                                        const Rational& c, int d, const std::vector<int>& hints) {
  BalancedAudit audit;
  audit.inside = y.subset_of(mask);
  if (!audit.inside) return audit;
  audit.components = components(g, mask - y);
  audit.balanced = true;
  for (VertexSet comp : audit.components) {
    audit.weights.push_back(w.sum(comp));
    if (audit.weights.back() > c && audit.balanced) {
      audit.balanced = false;
      audit.heavy = comp;
    }
  }
  WorkBudget budget;
  try {
    auto cover = bounded_cover(g, mask, y, d, hints, budget);
    audit.bounded = cover.has_value();
    if (cover) audit.centers = *cover;
  } catch (const CapExceeded&) {
    audit.capped = true;
  }
  audit.ok = audit.balanced && audit.bounded;
  return audit;
}

}  // namespace oddsign
