#ifndef ODDSIGN_SEPARATION_HPP
#define ODDSIGN_SEPARATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "oddsign/graph.hpp"
#include "oddsign/rational.hpp"

namespace oddsign {

struct Separation {
  VertexSet a, c, b;
  // Clique centre of c when c is a clique star; clique separations use c.
  std::optional<VertexSet> center;

  VertexSet x() const { return a | c; }
  VertexSet y() const { return c | b; }
  bool proper() const { return !a.empty() && !b.empty(); }
  Separation flipped() const { return Separation{b, c, a, center}; }
  bool same_sets(const Separation& o) const { return a == o.a && c == o.c && b == o.b; }
};

// Disjoint, covering mask, a anticomplete to b.
bool is_separation(const Graph& g, VertexSet mask, const Separation& s);
bool is_clique_star(const Graph& g, VertexSet x, VertexSet k);

bool crosses(const Separation& s1, const Separation& s2);

struct SkewResult {
  bool skewed = false;
  Separation normalized;  // a is the light side when skewed
};

// Both sides light: the lighter side becomes a; on equal weight, the side
// holding the least vertex.
SkewResult is_skewed(const Separation& s, const WeightAssignment& w, const Rational& eps);

// Index of the heaviest set: max weight, then fewest vertices, then least
// minimum vertex. `tie` reports whether the maximum weight was shared.
std::size_t heaviest(const std::vector<VertexSet>& sets, const WeightAssignment& w, bool* tie = nullptr);

struct CanonicalStarSeparation {
  Separation sep;
  VertexSet center;
  bool tie = false;
  std::vector<VertexSet> tied;  // components sharing the maximum weight
};

CanonicalStarSeparation canonical_star_separation(const Graph& g, VertexSet mask, const WeightAssignment& w,
                                                  VertexSet k);

bool is_minimal_clique_cutset(const Graph& g, VertexSet mask, VertexSet c);
// Lexicographic order of the cliques.
std::vector<VertexSet> minimal_clique_cutsets(const Graph& g, VertexSet mask, int size_k);
std::vector<VertexSet> cliques_of_size(const Graph& g, VertexSet mask, int size_k);
// Throws std::invalid_argument unless c is a minimal clique cutset.
Separation minimal_clique_separation(const Graph& g, VertexSet mask, const WeightAssignment& w, VertexSet c);

BigInt f_bound(int k, int delta);

// Greedy colouring of the conflict graph in input order; centres conflict
// when they share or join a vertex. Returns the class index per centre.
// Throws std::invalid_argument when the degree bound is violated.
std::vector<int> partition_centers(const Graph& g, const std::vector<VertexSet>& centers, int k, int delta);

struct StarCutset {
  int center = -1;
  VertexSet cutset;
};

std::optional<StarCutset> find_star_cutset(const Graph& g, VertexSet mask);
bool has_clique_cutset(const Graph& g, VertexSet mask);

}  // namespace oddsign

#endif  // ODDSIGN_SEPARATION_HPP
