#include "brute.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "oddsign/detect.hpp"
#include "oddsign/families.hpp"
#include "oddsign/separation.hpp"

namespace oddsign::brute {

namespace {

int deg_in(const Graph& g, int v, VertexSet s) { return (g.adj(v) & s).size(); }

bool connected(const Graph& g, VertexSet s) {
  if (s.empty()) return true;
  VertexSet seen = VertexSet::single(s.min());
  std::vector<int> stack{s.min()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.adj(v) & s)
      if (!seen.contains(u)) {
        seen.insert(u);
        stack.push_back(u);
      }
  }
  return seen == s;
}

int component_count(const Graph& g, VertexSet s) {
  int count = 0;
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.min());
    for (bool grew = true; grew;) {
      grew = false;
      for (int v : comp) {
        VertexSet add = (g.adj(v) & left) - comp;
        if (!add.empty()) {
          comp |= add;
          grew = true;
        }
      }
    }
    left -= comp;
    ++count;
  }
  return count;
}

std::vector<std::array<int, 3>> triangles_in(const Graph& g, VertexSet s) {
  std::vector<std::array<int, 3>> out;
  for (int a : s)
    for (int b : g.adj(a) & s)
      if (b > a)
        for (int c : g.adj(a) & g.adj(b) & s)
          if (c > b) out.push_back({a, b, c});
  return out;
}

// Canonical code of an n-vertex graph given as adjacency bit rows.
std::uint32_t canonical_code(int n, const std::vector<std::uint32_t>& adj) {
  std::vector<long> color(n);
  for (int v = 0; v < n; ++v) color[v] = std::popcount(adj[v]);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<long>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<long> nb;
      for (int u = 0; u < n; ++u)
        if (adj[v] >> u & 1) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<long>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<long> next(n);
    for (int v = 0; v < n; ++v) next[v] = std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin();
    if (next == color) break;
    color = next;
  }
  // Positions are handed out cell by cell in colour order; try every order
  // inside each cell.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b] || (color[a] == color[b] && a < b); });
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint32_t best = ~0u;
  std::function<void(std::size_t)> rec = [&](std::size_t ci) {
    if (ci == cells.size()) {
      std::uint32_t code = 0;
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
          if (adj[order[i]] >> order[j] & 1) code |= 1u << bit;
      best = std::min(best, code);
      return;
    }
    auto [lo, hi] = cells[ci];
    std::sort(order.begin() + lo, order.begin() + hi);
    do rec(ci + 1);
    while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return best;
}

Graph graph_from_rows(int n, const std::vector<std::uint32_t>& adj) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[u] >> v & 1) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

std::vector<Graph> graphs_up_to_iso(int n) {
  std::vector<std::vector<std::uint32_t>> level{{}};  // n = 0
  for (int k = 1; k <= n; ++k) {
    std::map<std::uint32_t, std::vector<std::uint32_t>> seen;
    for (const auto& base : level)
      for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
        std::vector<std::uint32_t> adj = base;
        adj.push_back(nb);
        for (int u = 0; u < k - 1; ++u)
          if (nb >> u & 1) adj[u] |= 1u << (k - 1);
        std::uint32_t code = canonical_code(k, adj);
        seen.emplace(code, adj);
      }
    level.clear();
    for (auto& [code, adj] : seen) level.push_back(adj);
  }
  std::vector<Graph> out;
  for (const auto& adj : level) out.push_back(graph_from_rows(n, adj));
  return out;
}

std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<Graph> out;
  for (Graph& g : graphs_up_to_iso(n))
    if (connected(g, g.vertices())) out.push_back(std::move(g));
  return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_bounded_degree_graph(int n, int max_degree, int edge_tries, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> deg(n, 0);
  std::set<std::pair<int, int>> edges;
  for (int t = 0; t < edge_tries; ++t) {
    int u = pick(rng), v = pick(rng);
    if (u == v || deg[u] >= max_degree || deg[v] >= max_degree) continue;
    if (!edges.insert({std::min(u, v), std::max(u, v)}).second) continue;
    ++deg[u];
    ++deg[v];
  }
  return Graph(n, {edges.begin(), edges.end()});
}

bool is_hole_set(const Graph& g, VertexSet s) {
  if (s.size() < 4) return false;
  for (int v : s)
    if (deg_in(g, v, s) != 2) return false;
  return connected(g, s);
}

bool is_theta_set(const Graph& g, VertexSet s) {
  std::vector<int> branch;
  for (int v : s) {
    int d = deg_in(g, v, s);
    if (d == 3)
      branch.push_back(v);
    else if (d != 2)
      return false;
  }
  if (branch.size() != 2 || g.adjacent(branch[0], branch[1])) return false;
  if (!connected(g, s)) return false;
  // Each of the three remaining pieces must be a path from a to b.
  VertexSet left = s - VertexSet::of({branch[0], branch[1]});
  int pieces = 0;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.min());
    for (bool grew = true; grew;) {
      grew = false;
      for (int v : comp) {
        VertexSet add = (g.adj(v) & left) - comp;
        if (!add.empty()) {
          comp |= add;
          grew = true;
        }
      }
    }
    if ((g.adj(branch[0]) & comp).size() != 1 || (g.adj(branch[1]) & comp).size() != 1) return false;
    left -= comp;
    ++pieces;
  }
  return pieces == 3;
}

bool is_prism_set(const Graph& g, VertexSet s) {
  int branch = 0;
  for (int v : s) {
    int d = deg_in(g, v, s);
    if (d == 3)
      ++branch;
    else if (d != 2)
      return false;
  }
  if (branch != 6 || !connected(g, s)) return false;
  auto tris = triangles_in(g, s);
  if (tris.size() != 2) return false;
  VertexSet t1 = VertexSet::from(tris[0]), t2 = VertexSet::from(tris[1]);
  if (t1.intersects(t2)) return false;
  // Without the triangle edges the rest must be three paths, each joining
  // the two triangles.
  std::vector<std::pair<int, int>> kept;
  for (auto [u, v] : g.edges_in(s)) {
    bool in1 = t1.contains(u) && t1.contains(v), in2 = t2.contains(u) && t2.contains(v);
    if (!in1 && !in2) kept.emplace_back(u, v);
  }
  Graph h(g.order(), kept);
  VertexSet left = s;
  int paths = 0;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.min());
    for (bool grew = true; grew;) {
      grew = false;
      for (int v : comp) {
        VertexSet add = (h.adj(v) & left) - comp;
        if (!add.empty()) {
          comp |= add;
          grew = true;
        }
      }
    }
    if ((comp & t1).size() != 1 || (comp & t2).size() != 1) return false;
    left -= comp;
    ++paths;
  }
  return paths == 3;
}

bool is_pyramid_set(const Graph& g, VertexSet s) {
  std::vector<int> branch;
  for (int v : s) {
    int d = deg_in(g, v, s);
    if (d == 3)
      branch.push_back(v);
    else if (d != 2)
      return false;
  }
  if (branch.size() != 4 || !connected(g, s)) return false;
  auto tris = triangles_in(g, s);
  if (tris.size() != 1) return false;
  VertexSet t = VertexSet::from(tris[0]);
  VertexSet b = VertexSet::from(branch);
  if (!t.subset_of(b)) return false;
  int apex = (b - t).min();
  std::vector<std::pair<int, int>> kept;
  for (auto [u, v] : g.edges_in(s))
    if (!(t.contains(u) && t.contains(v))) kept.emplace_back(u, v);
  Graph h(g.order(), kept);
  if (static_cast<int>(kept.size()) != s.size() - 1 || !connected(h, s)) return false;
  if (deg_in(h, apex, s) != 3) return false;
  for (int v : t)
    if (deg_in(h, v, s) != 1) return false;
  return true;
}

Census census(const Graph& g) {
  Census c;
  int n = g.order();
  for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
    VertexSet s(bits);
    int k = s.size();
    if (k < 4) continue;
    bool min2 = true;
    int deg3 = 0, high = 0;
    for (int v : s) {
      int d = deg_in(g, v, s);
      if (d < 2) {
        min2 = false;
        break;
      }
      deg3 += d == 3;
      high += d > 3;
    }
    if (!min2) continue;
    if (!c.c4 && k == 4 && is_hole_set(g, s)) c.c4 = true;
    if (high == 0) {
      if (!c.theta && deg3 == 2 && is_theta_set(g, s)) c.theta = true;
      if (!c.prism && deg3 == 6 && is_prism_set(g, s)) c.prism = true;
      if (!c.pyramid && deg3 == 4 && is_pyramid_set(g, s)) c.pyramid = true;
    }
    if (!c.even_wheel && k >= 5) {
      for (int x : s) {
        int d = deg_in(g, x, s);
        if (d >= 4 && d % 2 == 0 && is_hole_set(g, s - VertexSet::single(x))) {
          c.even_wheel = true;
          break;
        }
      }
    }
  }
  return c;
}

bool odd_signable_by_definition(const Graph& g) {
  auto edges = g.edges();
  if (edges.size() > 64) throw std::invalid_argument("odd_signable_by_definition: more than 64 edges");
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);
  // Rows: edge mask plus right-hand side 1.
  std::vector<std::uint64_t> rows;
  auto add_cycle = [&](VertexSet s) {
    std::uint64_t row = 0;
    for (auto e : g.edges_in(s)) row |= 1ULL << index[e];
    rows.push_back(row);
  };
  for (std::uint64_t bits = 0; bits < (1ULL << g.order()); ++bits) {
    VertexSet s(bits);
    if (s.size() == 3 ? triangles_in(g, s).size() == 1 : is_hole_set(g, s)) add_cycle(s);
  }
  // Every row has right-hand side 1, so the system is inconsistent exactly
  // when some sum of rows vanishes with an odd number of rows; track the
  // parity alongside the reduced mask.
  struct Row {
    std::uint64_t mask;
    bool parity;
    std::uint64_t pivot;  // appears in no other basis row
  };
  std::vector<Row> basis;
  for (std::uint64_t row : rows) {
    std::uint64_t r = row;
    bool parity = true;
    for (const Row& b : basis)
      if (r & b.pivot) {
        r ^= b.mask;
        parity ^= b.parity;
      }
    if (r == 0) {
      if (parity) return false;
      continue;
    }
    std::uint64_t pivot = r & -r;
    for (Row& b : basis)
      if (b.mask & pivot) {
        b.mask ^= r;
        b.parity ^= parity;
      }
    basis.push_back({r, parity, pivot});
  }
  return true;
}

int hole_count(const Graph& g, int max_len) {
  int count = 0;
  for (std::uint64_t bits = 0; bits < (1ULL << g.order()); ++bits) {
    VertexSet s(bits);
    if (s.size() <= max_len && is_hole_set(g, s)) ++count;
  }
  return count;
}

int treewidth_by_permutations(const Graph& g) {
  int n = g.order();
  if (n == 0) return -1;
  int best = n - 1;
  std::map<std::uint64_t, int> reached;
  // Depth-first over elimination orders, cutting prefixes that are already
  // no better than the best complete order.
  std::function<void(std::vector<VertexSet>&, VertexSet, int)> rec = [&](std::vector<VertexSet>& adj, VertexSet alive,
                                                                        int width) {
    if (width >= best) return;
    // The fill graph depends only on which vertices are gone.
    auto [it, fresh] = reached.try_emplace(alive.bits(), width);
    if (!fresh) {
      if (it->second <= width) return;
      it->second = width;
    }
    if (alive.empty()) {
      best = width;
      return;
    }
    for (int v : alive) {
      VertexSet nb = adj[v] & alive;
      std::vector<VertexSet> next = adj;
      for (int u : nb) next[u] |= nb - VertexSet::single(u);
      VertexSet rest = alive;
      rest.erase(v);
      rec(next, rest, std::max(width, nb.size()));
    }
  };
  std::vector<VertexSet> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.adj(v);
  rec(adj, g.vertices(), 0);
  return best;
}

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (int u : g.adj(v)) d[v][u] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

bool is_d_bounded(const Graph& g, VertexSet mask, VertexSet y, int d) {
  if (y.size() <= d) return true;
  Graph h = g.induced(mask);
  std::vector<int> old;
  g.induced(mask, &old);
  auto dist = floyd_warshall(h);
  int m = h.order();
  std::vector<VertexSet> balls(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (dist[i][j] <= d) balls[i].insert(old[j]);
  std::vector<int> pick;
  std::function<bool(int, VertexSet)> rec = [&](int from, VertexSet covered) {
    if (y.subset_of(covered)) return true;
    if (static_cast<int>(pick.size()) == d) return false;
    for (int i = from; i < m; ++i) {
      pick.push_back(i);
      bool ok = rec(i + 1, covered | balls[i]);
      pick.pop_back();
      if (ok) return true;
    }
    return false;
  };
  return rec(0, VertexSet{});
}

bool is_balanced(const Graph& g, VertexSet mask, const WeightAssignment& w, VertexSet y, const Rational& c) {
  VertexSet left = mask - y;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.min());
    for (bool grew = true; grew;) {
      grew = false;
      for (int v : comp) {
        VertexSet add = (g.adj(v) & left) - comp;
        if (!add.empty()) {
          comp |= add;
          grew = true;
        }
      }
    }
    Rational sum = 0;
    for (int v : comp) sum += w[v];
    if (sum > c) return false;
    left -= comp;
  }
  return true;
}

std::optional<VertexSet> min_balanced_separator(const Graph& g, const WeightAssignment& w, const Rational& c, int d) {
  int n = g.order();
  for (int k = 0; k <= n; ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    // Combinations in lexicographic order.
    while (true) {
      VertexSet y = VertexSet::from(idx);
      if (is_balanced(g, g.vertices(), w, y, c) && is_d_bounded(g, g.vertices(), y, d)) return y;
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

bool has_star_cutset(const Graph& g) {
  VertexSet all = g.vertices();
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> nb = g.adj(x).to_vector();
    for (std::uint32_t sub = 0; sub < (1u << nb.size()); ++sub) {
      VertexSet s = VertexSet::single(x);
      for (std::size_t i = 0; i < nb.size(); ++i)
        if (sub >> i & 1) s.insert(nb[i]);
      if (component_count(g, all - s) >= 2) return true;
    }
  }
  return false;
}

bool has_clique_cutset(const Graph& g) {
  VertexSet all = g.vertices();
  bool found = false;
  std::function<void(VertexSet, VertexSet)> grow = [&](VertexSet clique, VertexSet cand) {
    if (found) return;
    if (component_count(g, all - clique) >= 2) {
      found = true;
      return;
    }
    for (int v : cand) grow(clique | VertexSet::single(v), (cand & g.adj(v)) - VertexSet::range(v + 1));
  };
  grow(VertexSet{}, all);
  return found;
}

std::vector<TwoJoinSplit> all_2joins(const Graph& g) {
  std::vector<TwoJoinSplit> out;
  int n = g.order();
  VertexSet all = g.vertices();
  for (std::uint64_t rest = 0; rest < (1ULL << (n - 1)); ++rest) {
    VertexSet x1(1 | (rest << 1));
    VertexSet x2 = all - x1;
    if (x1.size() < 3 || x2.size() < 3) continue;
    std::map<std::uint64_t, VertexSet> by_nbhd;
    bool ok = true;
    for (int v : x1) {
      VertexSet nb = g.adj(v) & x2;
      if (!nb.empty()) by_nbhd[nb.bits()].insert(v);
    }
    if (by_nbhd.size() != 2) continue;
    auto first = by_nbhd.begin(), second = std::next(first);
    TwoJoinSplit s{x1, x2, first->second, second->second, VertexSet(first->first), VertexSet(second->first)};
    if (s.a2.intersects(s.b2)) ok = false;
    // Every vertex of A2 must see all of A1 (and likewise for B).
    for (int v : s.a2) ok &= s.a1.subset_of(g.adj(v));
    for (int v : s.b2) ok &= s.b1.subset_of(g.adj(v));
    if (!ok) continue;
    // Sides: an A-B path through the rest, and not a path themselves.
    auto side_ok = [&](VertexSet x, VertexSet a, VertexSet b) {
      VertexSet inner = x - a - b;
      bool linked = false;
      for (int u : a) {
        VertexSet reach = VertexSet::single(u), frontier = reach;
        while (!frontier.empty() && !linked) {
          VertexSet next;
          for (int v : frontier) next |= g.adj(v);
          if (next.intersects(b)) linked = true;
          next = (next & inner) - reach;
          reach |= next;
          frontier = next;
        }
      }
      if (!linked) return false;
      int ends = 0;
      bool is_path = connected(g, x);
      for (int v : x) {
        int d = deg_in(g, v, x);
        if (d > 2) is_path = false;
        ends += d <= 1;
      }
      if (x.size() > 1 && ends != 2) is_path = false;
      return !is_path;
    };
    if (side_ok(x1, s.a1, s.b1) && side_ok(x2, s.a2, s.b2)) {
      if (s.a1.min() > s.b1.min()) {
        std::swap(s.a1, s.b1);
        std::swap(s.a2, s.b2);
      }
      out.push_back(s);
    }
  }
  return out;
}

Graph line_graph(int nodes, const std::vector<std::pair<int, int>>& edges) {
  (void)nodes;
  std::vector<std::pair<int, int>> le;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) le.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return Graph(static_cast<int>(edges.size()), le);
}

namespace {

std::vector<std::vector<int>> flat_paths_of_length_3(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < g.order(); ++a)
    for (int m : g.adj(a))
      for (int mm : g.adj(m))
        if (mm != a)
          for (int b : g.adj(mm))
            if (b != m && a < b) {
              std::vector<int> p{a, m, mm, b};
              if (is_flat_path(g, p)) out.push_back(p);
            }
  return out;
}

}  // namespace

std::optional<Graph> glued_pyramids(int pieces, std::mt19937_64& rng) {
  auto piece = [&] {
    std::uniform_int_distribution<int> len(2, 5);
    return families::pyramid(len(rng), len(rng), 5);
  };
  Graph cur = piece();
  for (int i = 1; i < pieces; ++i) {
    auto f1 = flat_paths_of_length_3(cur);
    if (f1.empty()) break;
    Graph q = piece();
    auto f2 = flat_paths_of_length_3(q);
    std::uniform_int_distribution<std::size_t> p1(0, f1.size() - 1), p2(0, f2.size() - 1);
    cur = compose_blocks(cur, f1[p1(rng)], q, f2[p2(rng)]);
  }
  if (cur.order() > 40) return std::nullopt;
  if (!is_c4free_odd_signable(cur).member() || find_star_cutset(cur, cur.vertices())) return std::nullopt;
  return cur;
}

}  // namespace oddsign::brute
