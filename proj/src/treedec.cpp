#include "oddsign/treedec.hpp"

#include <algorithm>
#include <numeric>

namespace oddsign {

int TreeDecomposition::width() const {
  int w = 0;
  for (VertexSet b : bags) w = std::max(w, b.size());
  return w - 1;
}

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
  std::vector<std::vector<int>> out(bags.size());
  for (auto [s, t] : edges) {
    out[s].push_back(t);
    out[t].push_back(s);
  }
  return out;
}

namespace {

// Nodes reachable from start without crossing the edge (start, blocked).
std::vector<int> side_of(const std::vector<std::vector<int>>& adj, int start, int blocked) {
  std::vector<int> out{start};
  std::vector<bool> seen(adj.size(), false);
  seen[start] = true;
  seen[blocked] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int t : adj[out[i]])
      if (!seen[t]) {
        seen[t] = true;
        out.push_back(t);
      }
  return out;
}

}  // namespace

std::optional<std::string> tree_decomposition_defect(const Graph& g, VertexSet mask, const TreeDecomposition& td) {
  int n = td.nodes();
  if (n == 0) return mask.empty() ? std::nullopt : std::optional<std::string>("no nodes");
  if (static_cast<int>(td.edges.size()) != n - 1) return "node graph has " + std::to_string(td.edges.size()) + " edges for " + std::to_string(n) + " nodes";
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (auto [s, t] : td.edges) {
    if (s < 0 || t < 0 || s >= n || t >= n) return std::string("edge endpoint out of range");
    int a = find(s), b = find(t);
    if (a == b) return std::string("node graph has a cycle");
    root[a] = b;
  }
  VertexSet covered;
  for (VertexSet b : td.bags) {
    if (!b.subset_of(mask)) return "bag " + to_string(b) + " leaves the mask";
    covered |= b;
  }
  if (covered != mask) return "vertices " + to_string(mask - covered) + " are in no bag";
  for (auto [u, v] : g.edges_in(mask)) {
    VertexSet e = VertexSet::of({u, v});
    if (std::none_of(td.bags.begin(), td.bags.end(), [&](VertexSet b) { return e.subset_of(b); }))
      return "edge " + to_string(e) + " is in no bag";
  }
  auto adj = td.adjacency();
  for (int v : mask) {
    std::vector<int> holding;
    for (int t = 0; t < n; ++t)
      if (td.bags[t].contains(v)) holding.push_back(t);
    std::vector<bool> seen(n, false);
    std::vector<int> queue{holding.front()};
    seen[holding.front()] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int t : adj[queue[i]])
        if (!seen[t] && td.bags[t].contains(v)) {
          seen[t] = true;
          queue.push_back(t);
        }
    if (queue.size() != holding.size()) return "nodes holding vertex " + std::to_string(v) + " are not connected";
  }
  return std::nullopt;
}

Separation edge_separation(const TreeDecomposition& td, int e) {
  auto adj = td.adjacency();
  auto [s, t] = td.edges[e];
  VertexSet c = td.bags[s] & td.bags[t];
  VertexSet d1, d2;
  for (int x : side_of(adj, s, t)) d1 |= td.bags[x];
  for (int x : side_of(adj, t, s)) d2 |= td.bags[x];
  return Separation{d1 - c, c, d2 - c, std::nullopt};
}

}  // namespace oddsign
