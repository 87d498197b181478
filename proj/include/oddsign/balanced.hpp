#ifndef ODDSIGN_BALANCED_HPP
#define ODDSIGN_BALANCED_HPP

#include <optional>
#include <vector>

#include "oddsign/budget.hpp"
#include "oddsign/graph.hpp"
#include "oddsign/rational.hpp"

namespace oddsign {

// Centres v_1..v_k, k <= d, whose radius-d balls inside mask cover y.
// Hint centres are tried first, then a greedy cover, then exact branching.
// Throws CapExceeded when the branching runs out of budget.
std::optional<std::vector<int>> bounded_cover(const Graph& g, VertexSet mask, VertexSet y, int d,
                                              const std::vector<int>& hints, WorkBudget& budget);
std::optional<std::vector<int>> bounded_cover(const Graph& g, VertexSet mask, VertexSet y, int d);

struct BalancedAudit {
  bool ok = false;
  bool inside = false;     // y lies in the mask
  bool balanced = false;   // every component weighs at most c
  bool bounded = false;
  bool capped = false;     // the cover search ran out of budget
  std::vector<int> centers;
  std::vector<VertexSet> components;
  std::vector<Rational> weights;
  std::optional<VertexSet> heavy;  // first component above c
};

// Drops vertices of y, lowest degree in mask first (ties by index), while every component of
// mask - y still weighs at most c. Boundedness survives since the result is
// a subset of y.
VertexSet prune_balanced(const Graph& g, VertexSet mask, const WeightAssignment& w, VertexSet y, const Rational& c);

BalancedAudit verify_balanced_separator(const Graph& g, VertexSet mask, const WeightAssignment& w, VertexSet y,
                                        const Rational& c, int d, const std::vector<int>& hints = {});

}  // namespace oddsign

#endif  // ODDSIGN_BALANCED_HPP
