#ifndef ODDSIGN_LAMINAR_HPP
#define ODDSIGN_LAMINAR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "oddsign/graph.hpp"
#include "oddsign/rational.hpp"
#include "oddsign/separation.hpp"
#include "oddsign/treedec.hpp"

namespace oddsign {

struct LaminarCheck {
  bool laminar = true;
  std::optional<std::pair<std::size_t, std::size_t>> crossing;  // first crossing pair
};

LaminarCheck is_laminar(const std::vector<Separation>& seps);

// Node 0 is the root; separation i owns node i + 1 and tree edge i, which
// joins node i + 1 to its parent. The a side of separation i is the union of
// the bags below edge i, minus the cut.
struct LaminarDecomposition {
  TreeDecomposition td;
  std::vector<int> parent;  // parent[0] == -1
  std::vector<Separation> seps;
};

// s <= t when X_s is inside X_t and Y_t inside Y_s. Each separation hangs
// below its first minimal strict upper bound, or below the root. Throws
// std::invalid_argument on crossing or repeated separations and
// AssertionFailure when the axioms or the edge bijection fail.
LaminarDecomposition build_tree_decomposition(const Graph& g, VertexSet mask, const std::vector<Separation>& seps);

// nullopt when every separation equals exactly one edge separation and
// every edge separation is one of seps.
std::optional<std::string> bijection_defect(const LaminarDecomposition& dec);

struct CentralBag {
  VertexSet beta;
  int root = 0;
  LaminarDecomposition dec;       // built from the light-side-normalised separations
  std::vector<int> anchor;        // per separation; -1 when not incident to the root
  WeightAssignment w_x;           // domain beta
  bool connected = false;
  Rational eps0;                  // heaviest cut
  bool arborescence_hypothesis = false;  // eps + eps0 < 1/2
  bool unique_centers = false;           // no clique centres two separations
  bool weight_max_bound = false;         // w_X^max <= w^max + 2^delta * eps
  int sinks = 0;
};

// Throws std::invalid_argument when a separation is not eps-skewed, lacks a
// centre, or the normalised family crosses; AssertionFailure when the
// orientation has several sinks, beta meets a light side, or w_X misses 1.
CentralBag central_bag(const Graph& g, VertexSet mask, const WeightAssignment& w, const std::vector<Separation>& seps,
                       const Rational& eps);

// N^2[Y] inside beta.
VertexSet lift_separator(const Graph& g, VertexSet parent_mask, VertexSet beta, VertexSet y);

}  // namespace oddsign

#endif  // ODDSIGN_LAMINAR_HPP
