#ifndef ODDSIGN_TWOJOIN_HPP
#define ODDSIGN_TWOJOIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "oddsign/budget.hpp"
#include "oddsign/graph.hpp"
#include "oddsign/rational.hpp"

namespace oddsign {

struct TwoJoinSplit {
  VertexSet x1, x2, a1, b1, a2, b2;
};

// nullopt when split is a valid 2-join of g[mask] that keeps each protected
// path on one side; otherwise the first defect.
std::optional<std::string> split_defect(const Graph& g, VertexSet mask, const TwoJoinSplit& split,
                                        const std::vector<std::vector<int>>& protected_paths = {});

// Exhaustive labelling search; the least vertex of mask is put in X1.
// Throws CapExceeded when the budget runs out.
std::optional<TwoJoinSplit> find_2join(const Graph& g, VertexSet mask,
                                       const std::vector<std::vector<int>>& protected_paths, WorkBudget& budget);
std::optional<TwoJoinSplit> find_2join(const Graph& g, const std::vector<std::vector<int>>& protected_paths = {});

// Every split of g (up to swapping the sides), for audits at small n.
std::vector<TwoJoinSplit> all_2joins(const Graph& g, WorkBudget& budget);

struct BlockPair {
  Graph g1, g2;
  // Host vertex per block vertex; -1 on marker vertices.
  std::vector<int> host1, host2;
  // a2-m-m'-b2 in g1 and a1-m-m'-b1 in g2, as block vertex ids.
  std::vector<int> marker1, marker2;
};

// Blocks list X_i first in host order, then the four marker vertices.
BlockPair blocks(const Graph& g, const TwoJoinSplit& split);

// Inverse of blocks: drops each marker path and joins the attachments of
// its ends completely. Throws std::invalid_argument unless both markers are
// flat paths of length 3.
Graph compose_blocks(const Graph& g1, const std::vector<int>& marker1, const Graph& g2,
                     const std::vector<int>& marker2, VertexSet* x1_out = nullptr);

bool is_flat_path(const Graph& g, const std::vector<int>& path);

enum class BstarKind { none, clique, hole, long_pyramid, extended_nontrivial_basic };

const char* to_string(BstarKind k);

struct BstarTag {
  BstarKind kind = BstarKind::none;
  int x = -1, y = -1;                 // extended nontrivial basic: the adjacent pair
  int tree_nodes = 0;                 // root tree of L
  std::vector<std::pair<int, int>> tree_edge_of;  // per vertex of L (host ids): root tree edge
  VertexSet leaf_vertices;
};

BstarTag bstar_tag(const Graph& g);

// Root tree of a line graph of a tree: tree edge per vertex of mask, or
// nullopt when g[mask] is not such a line graph.
std::optional<std::vector<std::pair<int, int>>> line_graph_root_tree(const Graph& g, VertexSet mask, int* nodes = nullptr);

struct TwoJoinTreeNode {
  Graph g;
  std::vector<std::vector<int>> flat_paths;
  int parent = -1;
  int children[2] = {-1, -1};
  std::optional<TwoJoinSplit> split;
  BstarTag tag;
  int depth = 0;
};

struct TwoJoinTree {
  std::vector<TwoJoinTreeNode> nodes;  // nodes[0] is the root
  int leaves() const;
  int depth() const;
};

// Throws DataError when g is outside the class or has a star cutset,
// AssertionFailure when a block loses class membership or gains a star
// cutset, or when a node has neither a B* tag nor a usable 2-join.
TwoJoinTree build_2join_tree(const Graph& g, WorkBudget& budget);
TwoJoinTree build_2join_tree(const Graph& g);

struct WidthBounds {
  int corollary = 0;  // 45δ − 1
  BigInt gw = 0;      // 3(r − 1)(2^(rw + 1) − 1)
  int rw = 3;
};

WidthBounds width_bounds(int delta, int r, int rw);

}  // namespace oddsign

#endif  // ODDSIGN_TWOJOIN_HPP
