#ifndef ODDSIGN_TREEDEC_HPP
#define ODDSIGN_TREEDEC_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddsign/graph.hpp"
#include "oddsign/separation.hpp"

namespace oddsign {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;

  int nodes() const { return static_cast<int>(bags.size()); }
  int width() const;
  std::vector<std::vector<int>> adjacency() const;
};

// Checks the three axioms over mask and that the node graph is a tree.
// Returns a description of the first failure, or nullopt.
std::optional<std::string> tree_decomposition_defect(const Graph& g, VertexSet mask, const TreeDecomposition& td);

// The separation (D_first, C, D_second) of an edge, where D_first holds the
// side containing edges[e].first.
Separation edge_separation(const TreeDecomposition& td, int e);

}  // namespace oddsign

#endif  // ODDSIGN_TREEDEC_HPP
