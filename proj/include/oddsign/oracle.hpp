#ifndef ODDSIGN_ORACLE_HPP
#define ODDSIGN_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddsign/balanced.hpp"
#include "oddsign/budget.hpp"
#include "oddsign/graph.hpp"
#include "oddsign/rational.hpp"
#include "oddsign/treedec.hpp"

namespace oddsign {

inline constexpr int kTreewidthCap = 13;
inline constexpr int kSepStarCap = 10;
inline constexpr int kBalancedCap = 20;

struct TreewidthResult {
  int width = -1;
  TreeDecomposition td;  // bags in host vertex ids
  std::vector<int> order;  // elimination order
  bool exact = false;
};

// Subset DP over elimination orders. Throws CapExceeded above cap vertices.
TreewidthResult treewidth_exact(const Graph& g, VertexSet mask, int cap = kTreewidthCap);
TreewidthResult treewidth_exact(const Graph& g, int cap = kTreewidthCap);

// Greedy minimum fill-in order; an upper bound only.
TreewidthResult treewidth_min_fill(const Graph& g, VertexSet mask);

// Bags from an elimination order; components are linked into one tree.
TreeDecomposition decomposition_from_order(const Graph& g, VertexSet mask, const std::vector<int>& order);

// Exhaustive over every S and X. Throws CapExceeded above cap vertices.
int sep_star_exact(const Graph& g, const Rational& c, int cap = kSepStarCap);

struct ExactSeparator {
  VertexSet y;
  std::vector<int> centers;
};

// Smallest separator by size, then lexicographic; nullopt proves absence.
// Throws CapExceeded above cap vertices or when the budget runs out.
std::optional<ExactSeparator> balanced_separator_exact(const Graph& g, VertexSet mask, const WeightAssignment& w,
                                                       const Rational& c, int d, WorkBudget& budget,
                                                       int cap = kBalancedCap);
std::optional<ExactSeparator> balanced_separator_exact(const Graph& g, const WeightAssignment& w, const Rational& c,
                                                       int d);

enum class GenStrategy { rejection, constructive };

const char* to_string(GenStrategy s);

struct GeneratedMember {
  Graph g;
  std::string recipe;
  int attempts = 0;
};

// Connected class member with n vertices and maximum degree at most delta,
// deterministic in the seed. Throws CapExceeded after max_attempts draws.
GeneratedMember generate_class_member(int delta, int n, std::uint64_t seed, GenStrategy strategy,
                                      int max_attempts = 2000);

}  // namespace oddsign

#endif  // ODDSIGN_ORACLE_HPP
