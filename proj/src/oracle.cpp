#include "oddsign/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace oddsign {

namespace {

// Host vertices of mask as a dense list plus local adjacency bitmasks.
struct Local {
  std::vector<int> verts;
  std::vector<std::uint32_t> adj;

  Local(const Graph& g, VertexSet mask) : verts(mask.to_vector()), adj(verts.size(), 0) {
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = 0; j < verts.size(); ++j)
        if (g.adjacent(verts[i], verts[j])) adj[i] |= 1u << j;
  }
  int size() const { return static_cast<int>(verts.size()); }
};

// Vertices outside s and v reachable from v through s.
int q_size(const Local& l, std::uint32_t s, int v) {
  std::uint32_t reach = 1u << v, frontier = reach;
  std::uint32_t border = 0;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= l.adj[std::countr_zero(f)];
    border |= next & ~s & ~reach;
    next &= s & ~reach;
    reach |= next;
    frontier = next;
  }
  border &= ~(1u << v);
  return std::popcount(border);
}

}  // namespace

TreeDecomposition decomposition_from_order(const Graph& g, VertexSet mask, const std::vector<int>& order) {
  TreeDecomposition td;
  int n = static_cast<int>(order.size());
  std::vector<int> pos(kMaxVertices, -1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<VertexSet> fill(kMaxVertices);
  for (int v : mask) fill[v] = g.adj(v) & mask;
  VertexSet later = mask;
  std::vector<int> node_of(kMaxVertices, -1);
  for (int i = 0; i < n; ++i) node_of[order[i]] = i;
  td.bags.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    later.erase(v);
    VertexSet up = fill[v] & later;
    td.bags[i] = up | VertexSet::single(v);
    for (int a : up) fill[a] |= up - VertexSet::single(a);
    if (i + 1 == n) break;
    int parent = order[i + 1];
    int best = n;
    for (int a : up)
      if (pos[a] < best) best = pos[a];
    if (best < n) parent = order[best];
    td.edges.emplace_back(i, node_of[parent]);
  }
  return td;
}

TreewidthResult treewidth_exact(const Graph& g, VertexSet mask, int cap) {
  Local l(g, mask);
  int n = l.size();
  if (n > cap) throw CapExceeded("treewidth_exact: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  TreewidthResult out;
  out.exact = true;
  if (n == 0) return out;
  std::size_t full = std::size_t{1} << n;
  std::vector<std::int8_t> tw(full, 0);
  std::vector<std::int8_t> arg(full, -1);
  tw[0] = -1;
  for (std::size_t s = 1; s < full; ++s) {
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t bits = static_cast<std::uint32_t>(s); bits; bits &= bits - 1) {
      int v = std::countr_zero(bits);
      std::uint32_t rest = static_cast<std::uint32_t>(s) & ~(1u << v);
      int val = std::max<int>(tw[rest], q_size(l, rest, v));
      if (val < best) {
        best = val;
        arg[s] = static_cast<std::int8_t>(v);
      }
    }
    tw[s] = static_cast<std::int8_t>(best);
  }
  out.width = tw[full - 1];
  std::vector<int> rev;
  for (std::uint32_t s = static_cast<std::uint32_t>(full - 1); s; s &= ~(1u << arg[s])) rev.push_back(l.verts[arg[s]]);
  out.order.assign(rev.rbegin(), rev.rend());
  out.td = decomposition_from_order(g, mask, out.order);
  return out;
}

TreewidthResult treewidth_exact(const Graph& g, int cap) { return treewidth_exact(g, g.vertices(), cap); }

TreewidthResult treewidth_min_fill(const Graph& g, VertexSet mask) {
  std::vector<VertexSet> fill(kMaxVertices);
  for (int v : mask) fill[v] = g.adj(v) & mask;
  VertexSet left = mask;
  TreewidthResult out;
  while (!left.empty()) {
    int pick = -1, pick_cost = std::numeric_limits<int>::max(), pick_deg = 0;
    for (int v : left) {
      VertexSet nb = fill[v] & left;
      int cost = 0;
      for (int a : nb) cost += (nb - fill[a] - VertexSet::single(a)).size();
      if (cost < pick_cost || (cost == pick_cost && nb.size() < pick_deg)) {
        pick = v;
        pick_cost = cost;
        pick_deg = nb.size();
      }
    }
    VertexSet nb = fill[pick] & left;
    for (int a : nb) fill[a] |= nb - VertexSet::single(a);
    left.erase(pick);
    out.order.push_back(pick);
  }
  out.td = decomposition_from_order(g, mask, out.order);
  out.width = out.td.width();
  return out;
}

int sep_star_exact(const Graph& g, const Rational& c, int cap) {
  int n = g.order();
  if (n > cap) throw CapExceeded("sep_star_exact: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  std::size_t full = std::size_t{1} << n;
  std::vector<std::vector<VertexSet>> comps(full);
  std::vector<std::size_t> by_size;
  for (std::size_t x = 0; x < full; ++x) {
    comps[x] = components(g, g.vertices() - VertexSet(x));
    by_size.push_back(x);
  }
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](std::size_t a, std::size_t b) { return std::popcount(a) < std::popcount(b); });
  int answer = 0;
  for (std::size_t s = 1; s < full; ++s) {
    VertexSet sv(s);
    Rational limit = c * sv.size();
    for (std::size_t x : by_size) {
      bool ok = std::all_of(comps[x].begin(), comps[x].end(),
                            [&](VertexSet comp) { return Rational((comp & sv).size()) <= limit; });
      if (ok) {
        answer = std::max(answer, std::popcount(x));
        break;
      }
    }
  }
  return answer;
}

std::optional<ExactSeparator> balanced_separator_exact(const Graph& g, VertexSet mask, const WeightAssignment& w,
                                                       const Rational& c, int d, WorkBudget& budget, int cap) {
  std::vector<int> verts = mask.to_vector();
  int n = static_cast<int>(verts.size());
  if (n > cap)
    throw CapExceeded("balanced_separator_exact: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  for (int k = 0; k <= n; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      budget.charge();
      VertexSet y;
      for (int i : idx) y.insert(verts[i]);
      bool light = true;
      for (VertexSet comp : components(g, mask - y))
        if (w.sum(comp) > c) {
          light = false;
          break;
        }
      if (light) {
        if (auto cover = bounded_cover(g, mask, y, d, {}, budget)) return ExactSeparator{y, *cover};
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<ExactSeparator> balanced_separator_exact(const Graph& g, const WeightAssignment& w, const Rational& c,
                                                       int d) {
  WorkBudget budget;
  return balanced_separator_exact(g, g.vertices(), w, c, d, budget);
}

}  // namespace oddsign
