#include "oddsign/twojoin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "oddsign/detect.hpp"
#include "oddsign/separation.hpp"

namespace oddsign {

const char* to_string(BstarKind k) {
  switch (k) {
    case BstarKind::none: return "none";
    case BstarKind::clique: return "clique";
    case BstarKind::hole: return "hole";
    case BstarKind::long_pyramid: return "long_pyramid";
    case BstarKind::extended_nontrivial_basic: return "extended_nontrivial_basic";
  }
  return "?";
}

namespace {

bool induces_path(const Graph& g, VertexSet x) {
  if (x.empty() || !is_connected(g, x)) return false;
  int ends = 0;
  for (int v : x) {
    int d = g.degree_in(v, x);
    if (d > 2) return false;
    ends += d <= 1;
  }
  return x.size() == 1 || ends == 2;
}

// An induced a-b path with interior in c exists iff b is reached from a
// through c.
bool connects(const Graph& g, VertexSet a, VertexSet b, VertexSet c) {
  VertexSet reach = g.open_neighborhood(a) & c;
  for (VertexSet frontier = reach; !frontier.empty();) {
    VertexSet next = (g.open_neighborhood(frontier) & c) - reach;
    reach |= next;
    frontier = next;
  }
  return g.open_neighborhood(a | reach).intersects(b);
}

}  // namespace

std::optional<std::string> split_defect(const Graph& g, VertexSet mask, const TwoJoinSplit& s,
                                        const std::vector<std::vector<int>>& protected_paths) {
  if (s.x1.intersects(s.x2) || (s.x1 | s.x2) != mask) return "sides do not partition the vertex set";
  const VertexSet xs[2] = {s.x1, s.x2}, as[2] = {s.a1, s.a2}, bs[2] = {s.b1, s.b2};
  for (int i = 0; i < 2; ++i) {
    std::string side = std::to_string(i + 1);
    if (as[i].empty() || bs[i].empty()) return "A" + side + " or B" + side + " is empty";
    if (as[i].intersects(bs[i])) return "A" + side + " meets B" + side;
    if (!(as[i] | bs[i]).subset_of(xs[i])) return "A" + side + " or B" + side + " leaves X" + side;
    if (!connects(g, as[i], bs[i], xs[i] - as[i] - bs[i])) return "no A" + side + "-B" + side + " path in X" + side;
    if (induces_path(g, xs[i])) return "X" + side + " induces a path";
  }
  for (int u : s.x1)
    for (int v : s.x2) {
      bool want = (s.a1.contains(u) && s.a2.contains(v)) || (s.b1.contains(u) && s.b2.contains(v));
      if (g.adjacent(u, v) != want) return "edge pattern between the sides is wrong at " + std::to_string(u) + "," + std::to_string(v);
    }
  for (const auto& p : protected_paths) {
    VertexSet pv = VertexSet::from(p);
    if (!pv.subset_of(s.x1) && !pv.subset_of(s.x2)) return "a protected path crosses the split";
  }
  return std::nullopt;
}

namespace {

enum Label { A1, B1, C1, A2, B2, C2 };
constexpr std::uint8_t kSide1 = 0b000111, kSide2 = 0b111000;

// Labels v may take given that a neighbour (adj) or non-neighbour of v
// carries label l.
std::uint8_t allowed(int l, bool adj) {
  bool side1 = l < 3;
  std::uint8_t same = side1 ? kSide1 : kSide2;
  if (adj) {
    if (l == A1) return same | (1 << A2);
    if (l == B1) return same | (1 << B2);
    if (l == A2) return same | (1 << A1);
    if (l == B2) return same | (1 << B1);
    return same;
  }
  std::uint8_t all = 0b111111;
  if (l == A1) return all & ~(1 << A2);
  if (l == B1) return all & ~(1 << B2);
  if (l == A2) return all & ~(1 << A1);
  if (l == B2) return all & ~(1 << B1);
  return all;
}

struct SplitSearch {
  const Graph& g;
  VertexSet mask;
  const std::vector<std::vector<int>>& paths;
  WorkBudget& budget;
  std::function<bool(const TwoJoinSplit&)> visit;  // false stops the search
  std::vector<int> verts;
  std::vector<int> label;
  std::vector<std::vector<int>> paths_of;  // path indices per vertex

  bool run(std::vector<std::uint8_t>& dom) {
    budget.charge();
    std::uint8_t seen = 0;
    int pick = -1, best = 7;
    for (int v : verts) {
      seen |= dom[v];
      if (label[v] >= 0) continue;
      int size = std::popcount(static_cast<unsigned>(dom[v]));
      if (size < best) {
        best = size;
        pick = v;
      }
    }
    constexpr std::uint8_t needed = (1 << A1) | (1 << B1) | (1 << A2) | (1 << B2);
    if ((seen & needed) != needed) return true;
    if (pick < 0) {
      TwoJoinSplit s;
      for (int v : verts) {
        int l = label[v];
        (l < 3 ? s.x1 : s.x2).insert(v);
        if (l == A1) s.a1.insert(v);
        if (l == B1) s.b1.insert(v);
        if (l == A2) s.a2.insert(v);
        if (l == B2) s.b2.insert(v);
      }
      if (split_defect(g, mask, s, paths)) return true;
      return visit(s);
    }
    for (int l = 0; l < 6; ++l) {
      if (!(dom[pick] >> l & 1)) continue;
      std::vector<std::uint8_t> next = dom;
      next[pick] = static_cast<std::uint8_t>(1 << l);
      label[pick] = l;
      bool dead = false;
      for (int v : verts) {
        if (label[v] >= 0) continue;
        next[v] &= allowed(l, g.adjacent(pick, v));
        if (!next[v]) dead = true;
      }
      for (int p : paths_of[pick])
        for (int v : paths[p])
          if (label[v] < 0) {
            next[v] &= l < 3 ? kSide1 : kSide2;
            if (!next[v]) dead = true;
          }
      if (!dead && !run(next)) return false;
      label[pick] = -1;
    }
    return true;
  }
};

void search_splits(const Graph& g, VertexSet mask, const std::vector<std::vector<int>>& paths, WorkBudget& budget,
                   const std::function<bool(const TwoJoinSplit&)>& visit) {
  if (mask.size() < 6) return;  // each side needs at least three vertices
  SplitSearch s{g, mask, paths, budget, visit, mask.to_vector(), std::vector<int>(g.order(), -1), {}};
  s.paths_of.assign(g.order(), {});
  for (std::size_t p = 0; p < paths.size(); ++p)
    for (int v : paths[p]) s.paths_of[v].push_back(static_cast<int>(p));
  std::vector<std::uint8_t> dom(g.order(), 0b111111);
  dom[mask.min()] = kSide1;
  s.run(dom);
}

}  // namespace

std::optional<TwoJoinSplit> find_2join(const Graph& g, VertexSet mask,
                                       const std::vector<std::vector<int>>& protected_paths, WorkBudget& budget) {
  std::optional<TwoJoinSplit> out;
  search_splits(g, mask, protected_paths, budget, [&](const TwoJoinSplit& s) {
    out = s;
    return false;
  });
  return out;
}

std::optional<TwoJoinSplit> find_2join(const Graph& g, const std::vector<std::vector<int>>& protected_paths) {
  WorkBudget budget;
  return find_2join(g, g.vertices(), protected_paths, budget);
}

std::vector<TwoJoinSplit> all_2joins(const Graph& g, WorkBudget& budget) {
  std::vector<TwoJoinSplit> out;
  search_splits(g, g.vertices(), {}, budget, [&](const TwoJoinSplit& s) {
    if (s.a1.min() < s.b1.min()) out.push_back(s);  // A/B relabelling gives the same 2-join
    return true;
  });
  return out;
}

BlockPair blocks(const Graph& g, const TwoJoinSplit& split) {
  BlockPair out;
  auto build = [&](VertexSet x, VertexSet a, VertexSet b, Graph& block, std::vector<int>& host, std::vector<int>& marker) {
    host = x.to_vector();
    std::vector<int> local(g.order(), -1);
    for (std::size_t i = 0; i < host.size(); ++i) local[host[i]] = static_cast<int>(i);
    int k = static_cast<int>(host.size());
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges_in(x)) edges.emplace_back(local[u], local[v]);
    marker = {k, k + 1, k + 2, k + 3};
    edges.emplace_back(k, k + 1);
    edges.emplace_back(k + 1, k + 2);
    edges.emplace_back(k + 2, k + 3);
    for (int v : a) edges.emplace_back(k, local[v]);
    for (int v : b) edges.emplace_back(k + 3, local[v]);
    for (int i = 0; i < 4; ++i) host.push_back(-1);
    block = Graph(k + 4, edges);
  };
  build(split.x1, split.a1, split.b1, out.g1, out.host1, out.marker1);
  build(split.x2, split.a2, split.b2, out.g2, out.host2, out.marker2);
  return out;
}

bool is_flat_path(const Graph& g, const std::vector<int>& path) {
  if (path.size() < 3 || !is_induced_path(g, path)) return false;
  for (std::size_t i = 1; i + 1 < path.size(); ++i)
    if (g.degree(path[i]) != 2) return false;
  VertexSet members = VertexSet::from(path);
  return ((g.adj(path.front()) & g.adj(path.back())) - members).empty();
}

Graph compose_blocks(const Graph& g1, const std::vector<int>& marker1, const Graph& g2,
                     const std::vector<int>& marker2, VertexSet* x1_out) {
  if (marker1.size() != 4 || marker2.size() != 4 || !is_flat_path(g1, marker1) || !is_flat_path(g2, marker2))
    throw std::invalid_argument("compose_blocks: markers must be flat paths of length 3");
  VertexSet m1 = VertexSet::from(marker1), m2 = VertexSet::from(marker2);
  VertexSet x1 = g1.vertices() - m1, x2 = g2.vertices() - m2;
  VertexSet a1 = g1.adj(marker1[0]) - m1, b1 = g1.adj(marker1[3]) - m1;
  VertexSet a2 = g2.adj(marker2[0]) - m2, b2 = g2.adj(marker2[3]) - m2;
  std::vector<int> id1(g1.order(), -1), id2(g2.order(), -1);
  int n = 0;
  for (int v : x1) id1[v] = n++;
  for (int v : x2) id2[v] = n++;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g1.edges_in(x1)) edges.emplace_back(id1[u], id1[v]);
  for (auto [u, v] : g2.edges_in(x2)) edges.emplace_back(id2[u], id2[v]);
  for (int u : a1)
    for (int v : a2) edges.emplace_back(id1[u], id2[v]);
  for (int u : b1)
    for (int v : b2) edges.emplace_back(id1[u], id2[v]);
  if (x1_out) *x1_out = VertexSet::range(x1.size());
  return Graph(n, edges);
}

namespace {

std::vector<VertexSet> maximal_cliques(const Graph& g, VertexSet mask) {
  std::vector<VertexSet> out;
  std::function<void(VertexSet, VertexSet, VertexSet)> bk = [&](VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    for (int v : p) {
      bk(r | VertexSet::single(v), p & g.adj(v), x & g.adj(v));
      p.erase(v);
      x.insert(v);
    }
  };
  bk(VertexSet{}, mask, VertexSet{});
  return out;
}

}  // namespace

std::optional<std::vector<std::pair<int, int>>> line_graph_root_tree(const Graph& g, VertexSet mask, int* nodes) {
  if (mask.empty() || !is_connected(g, mask)) return std::nullopt;
  std::vector<VertexSet> cliques = maximal_cliques(g, mask);
  for (auto [u, v] : g.edges_in(mask)) {
    int holders = 0;
    for (VertexSet k : cliques) holders += k.contains(u) && k.contains(v);
    if (holders != 1) return std::nullopt;
  }
  std::vector<std::pair<int, int>> edge_of(g.order(), {-1, -1});
  int count = static_cast<int>(cliques.size());
  for (int v : mask) {
    std::vector<int> in;
    for (int i = 0; i < static_cast<int>(cliques.size()); ++i)
      if (cliques[i].contains(v)) in.push_back(i);
    if (in.size() > 2) return std::nullopt;
    edge_of[v] = in.size() == 2 ? std::pair{in[0], in[1]} : std::pair{in[0], count++};
  }
  if (count != mask.size() + 1) return std::nullopt;
  std::vector<int> root(count);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  for (int v : mask) {
    int a = find(edge_of[v].first), b = find(edge_of[v].second);
    if (a == b) return std::nullopt;
    root[a] = b;
  }
  for (int u : mask)
    for (int v : mask) {
      if (u >= v) continue;
      auto [p, q] = edge_of[u];
      auto [r, s] = edge_of[v];
      bool share = p == r || p == s || q == r || q == s;
      if (share != g.adjacent(u, v)) return std::nullopt;
    }
  if (nodes) *nodes = count;
  return edge_of;
}

BstarTag bstar_tag(const Graph& g) {
  BstarTag tag;
  VertexSet all = g.vertices();
  int n = g.order();
  if (n == 0) return tag;
  if (is_clique(g, all)) {
    tag.kind = BstarKind::clique;
    return tag;
  }
  if (n >= 4 && is_connected(g, all) &&
      std::all_of(all.begin(), all.end(), [&](int v) { return g.degree(v) == 2; })) {
    tag.kind = BstarKind::hole;
    return tag;
  }
  {
    WorkBudget budget;
    auto hit = find_theta_prism_pyramid(g, KindSet::only(ThreePathKind::pyramid), budget);
    if (hit.found() && hit.witness->members() == all &&
        std::all_of(hit.witness->paths.begin(), hit.witness->paths.end(), [](const PathRecord& p) { return p.length() >= 2; })) {
      tag.kind = BstarKind::long_pyramid;
      return tag;
    }
  }
  for (auto [x, y] : g.edges()) {
    VertexSet l = all - VertexSet::of({x, y});
    int nodes = 0;
    auto root = line_graph_root_tree(g, l, &nodes);
    if (!root) continue;
    std::vector<int> deg(nodes, 0);
    for (int v : l) {
      ++deg[(*root)[v].first];
      ++deg[(*root)[v].second];
    }
    VertexSet leaves;
    for (int v : l)
      if (deg[(*root)[v].first] == 1 || deg[(*root)[v].second] == 1) leaves.insert(v);
    int big = 0;
    for (VertexSet k : maximal_cliques(g, l)) big += k.size() >= 3;
    if (big < 2) continue;
    bool ok = true;
    for (int v : l) {
      int hits = g.adjacent(v, x) + g.adjacent(v, y);
      if (hits != (leaves.contains(v) ? 1 : 0)) ok = false;
    }
    if (!ok) continue;
    tag.kind = BstarKind::extended_nontrivial_basic;
    tag.x = x;
    tag.y = y;
    tag.tree_nodes = nodes;
    tag.tree_edge_of = *root;
    tag.leaf_vertices = leaves;
    return tag;
  }
  return tag;
}

int TwoJoinTree::leaves() const {
  int count = 0;
  for (const auto& node : nodes) count += node.children[0] < 0;
  return count;
}

int TwoJoinTree::depth() const {
  int d = 0;
  for (const auto& node : nodes) d = std::max(d, node.depth);
  return d;
}

TwoJoinTree build_2join_tree(const Graph& g, WorkBudget& budget) {
  {
    auto m = is_c4free_odd_signable(g, budget);
    if (m.capped()) throw CapExceeded("class membership check ran out of budget");
    if (!m.member()) throw DataError(std::string("graph is not C4-free odd-signable: contains ") + to_string(m.violation));
    if (auto sc = find_star_cutset(g, g.vertices()))
      throw DataError("graph has a star cutset centred at " + std::to_string(sc->center));
  }
  TwoJoinTree tree;
  tree.nodes.push_back(TwoJoinTreeNode{g, {}, -1, {-1, -1}, std::nullopt, {}, 0});
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    TwoJoinTreeNode node = tree.nodes[i];
    node.tag = bstar_tag(node.g);
    if (node.tag.kind != BstarKind::none) {
      tree.nodes[i].tag = node.tag;
      continue;
    }
    auto split = find_2join(node.g, node.g.vertices(), node.flat_paths, budget);
    if (!split)
      throw AssertionFailure("node has neither a B* tag nor a 2-join",
                             "falsification candidate at tree node " + std::to_string(i) + " with " +
                                 std::to_string(node.g.order()) + " vertices");
    tree.nodes[i].split = split;
    BlockPair bp = blocks(node.g, *split);
    for (int side = 0; side < 2; ++side) {
      const Graph& block = side == 0 ? bp.g1 : bp.g2;
      const auto& host = side == 0 ? bp.host1 : bp.host2;
      if (block.order() > 60) throw CapExceeded("2-join block exceeds 60 vertices");
      auto m = is_c4free_odd_signable(block, budget);
      if (m.capped()) throw CapExceeded("block membership check ran out of budget");
      if (!m.member())
        throw AssertionFailure("block of decomposition left the class", std::string("contains ") + to_string(m.violation));
      if (auto sc = find_star_cutset(block, block.vertices()))
        throw AssertionFailure("block of decomposition has a star cutset", "centre " + std::to_string(sc->center));
      std::vector<int> local(node.g.order(), -1);
      for (std::size_t v = 0; v < host.size(); ++v)
        if (host[v] >= 0) local[host[v]] = static_cast<int>(v);
      TwoJoinTreeNode child;
      child.g = block;
      child.parent = static_cast<int>(i);
      child.depth = node.depth + 1;
      VertexSet x = side == 0 ? split->x1 : split->x2;
      for (const auto& p : node.flat_paths) {
        if (!VertexSet::from(p).subset_of(x)) continue;
        std::vector<int> mapped;
        for (int v : p) mapped.push_back(local[v]);
        child.flat_paths.push_back(mapped);
      }
      child.flat_paths.push_back(side == 0 ? bp.marker1 : bp.marker2);
      tree.nodes[i].children[side] = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(std::move(child));
    }
  }
  return tree;
}

TwoJoinTree build_2join_tree(const Graph& g) {
  WorkBudget budget;
  return build_2join_tree(g, budget);
}

WidthBounds width_bounds(int delta, int r, int rw) {
  WidthBounds w;
  w.corollary = 45 * delta - 1;
  w.gw = BigInt(3 * (r - 1)) * ((BigInt(1) << (rw + 1)) - 1);
  w.rw = rw;
  return w;
}

}  // namespace oddsign
