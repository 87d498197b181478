// Brute-force reference implementations used only by the tests. Each one
// follows the textbook definition directly and shares no code with the
// library routine it checks.
#ifndef ODDSIGN_TESTS_BRUTE_HPP
#define ODDSIGN_TESTS_BRUTE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "oddsign/graph.hpp"
#include "oddsign/rational.hpp"
#include "oddsign/twojoin.hpp"

namespace oddsign::brute {

// All graphs on n vertices (n <= 8) up to isomorphism.
std::vector<Graph> graphs_up_to_iso(int n);
std::vector<Graph> connected_graphs_up_to_iso(int n);

Graph random_graph(int n, double p, std::mt19937_64& rng);
Graph random_bounded_degree_graph(int n, int max_degree, int edge_tries, std::mt19937_64& rng);

// Which forbidden configurations occur as induced subgraphs, by scanning
// every vertex subset.
struct Census {
  bool c4 = false;
  bool theta = false;
  bool prism = false;
  bool pyramid = false;
  bool even_wheel = false;
  bool member() const { return !c4 && !theta && !prism && !even_wheel; }
};
Census census(const Graph& g);

// Straight from the definition: some 0/1 edge weighting gives every
// triangle and every hole odd weight. Solved as a linear system over GF(2);
// needs at most 64 edges.
bool odd_signable_by_definition(const Graph& g);

// Induced subgraph G[s] shape tests.
bool is_hole_set(const Graph& g, VertexSet s);
bool is_theta_set(const Graph& g, VertexSet s);
bool is_prism_set(const Graph& g, VertexSet s);
bool is_pyramid_set(const Graph& g, VertexSet s);

// Holes counted as vertex sets.
int hole_count(const Graph& g, int max_len);

// Minimum over all elimination orders; n <= 10.
int treewidth_by_permutations(const Graph& g);

std::vector<std::vector<int>> floyd_warshall(const Graph& g);

// Some <= d vertices whose radius-d balls (in g[mask]) cover y.
bool is_d_bounded(const Graph& g, VertexSet mask, VertexSet y, int d);
bool is_balanced(const Graph& g, VertexSet mask, const WeightAssignment& w, VertexSet y, const Rational& c);
// Least size, then lexicographically least.
std::optional<VertexSet> min_balanced_separator(const Graph& g, const WeightAssignment& w, const Rational& c, int d);

bool has_star_cutset(const Graph& g);
bool has_clique_cutset(const Graph& g);

// Every 2-join by enumerating the partitions (A/B relabelling counted once).
std::vector<TwoJoinSplit> all_2joins(const Graph& g);

// Line graph of the tree on `nodes` vertices with the given edges.
Graph line_graph(int nodes, const std::vector<std::pair<int, int>>& edges);

// Star-cutset-free class members built by gluing pyramids along flat paths
// of length 3. Returns nullopt when the glued graph leaves the class.
std::optional<Graph> glued_pyramids(int pieces, std::mt19937_64& rng);

}  // namespace oddsign::brute

#endif  // ODDSIGN_TESTS_BRUTE_HPP
