#include "oddsign/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "oddsign/budget.hpp"

namespace oddsign {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::found:
      return "found";
    case Outcome::absent:
      return "absent";
    case Outcome::capped:
      return "capped";
  }
  return "?";
}

bool lex_less(VertexSet a, VertexSet b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

VertexSet PathRecord::interior() const {
  VertexSet s;
  for (std::size_t i = 1; i + 1 < vertices.size(); ++i) s.insert(vertices[i]);
  return s;
}

HoleRecord canonical_hole(std::vector<int> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return HoleRecord{std::move(cycle)};
}

Graph::Graph(int n) : n_(n), adj_(n), nbrs_(n) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges, std::vector<std::string> labels) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
  if (!labels.empty() && static_cast<int>(labels.size()) != n) throw std::invalid_argument("label count mismatch");
  labels_ = std::move(labels);
  finish();
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
  if (adj_[u].contains(v)) return;
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++m_;
}

void Graph::finish() {
  for (int v = 0; v < n_; ++v) nbrs_[v] = adj_[v].to_vector();
}

int Graph::max_degree() const { return max_degree_in(vertices()); }

int Graph::max_degree_in(VertexSet mask) const {
  int best = 0;
  for (int v : mask) best = std::max(best, degree_in(v, mask));
  return best;
}

VertexSet Graph::open_neighborhood(VertexSet x) const {
  VertexSet out;
  for (int v : x) out |= adj_[v];
  return out - x;
}

std::vector<std::pair<int, int>> Graph::edges() const { return edges_in(vertices()); }

std::vector<std::pair<int, int>> Graph::edges_in(VertexSet mask) const {
  std::vector<std::pair<int, int>> out;
  for (int u : mask) {
    for (int v : adj_[u] & mask) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(int v) const {
  if (!labels_.empty() && !labels_[v].empty()) return labels_[v];
  return std::to_string(v + 1);
}

Graph Graph::induced(VertexSet mask, std::vector<int>* old_of_new) const {
  std::vector<int> old = mask.to_vector();
  std::vector<int> pos(n_, -1);
  for (std::size_t i = 0; i < old.size(); ++i) pos[old[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : edges_in(mask)) es.emplace_back(pos[u], pos[v]);
  std::vector<std::string> ls;
  if (!labels_.empty()) {
    for (int v : old) ls.push_back(labels_[v]);
  }
  if (old_of_new) *old_of_new = old;
  return Graph(static_cast<int>(old.size()), es, std::move(ls));
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.min());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next = g.open_neighborhood(frontier) & rest;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

bool is_connected(const Graph& g, VertexSet within) { return components(g, within).size() <= 1; }

VertexSet ball(const Graph& g, VertexSet seeds, int radius) { return ball(g, seeds, radius, g.vertices()); }

VertexSet ball(const Graph& g, VertexSet seeds, int radius, VertexSet within) {
  VertexSet reached = seeds;
  VertexSet frontier = seeds & within;
  for (int r = 0; r < radius && !frontier.empty(); ++r) {
    VertexSet next = (g.open_neighborhood(frontier) & within) - reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

std::vector<int> distances_from(const Graph& g, int v, VertexSet within) {
  std::vector<int> dist(g.order(), -1);
  if (!within.contains(v)) return dist;
  dist[v] = 0;
  VertexSet seen = VertexSet::single(v);
  VertexSet frontier = seen;
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next = (g.open_neighborhood(frontier) & within) - seen;
    for (int u : next) dist[u] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

bool is_anticomplete(const Graph& g, VertexSet x, VertexSet y) {
  if (x.intersects(y)) throw std::invalid_argument("is_anticomplete: sets overlap");
  for (int v : x) {
    if (g.adj(v).intersects(y)) return false;
  }
  return true;
}

bool is_complete_to(const Graph& g, VertexSet x, VertexSet y) {
  for (int v : x) {
    if (!y.subset_of(g.adj(v))) return false;
  }
  return true;
}

bool is_clique(const Graph& g, VertexSet x) {
  for (int v : x) {
    if (!(x - VertexSet::single(v)).subset_of(g.adj(v))) return false;
  }
  return true;
}

std::optional<PathRecord> path_avoiding(const Graph& g, int from, VertexSet to, VertexSet forbidden) {
  return path_avoiding(g, from, to, forbidden, g.vertices());
}

std::optional<PathRecord> path_avoiding(const Graph& g, int from, VertexSet to, VertexSet forbidden,
                                        VertexSet within) {
  if (forbidden.contains(from)) throw std::invalid_argument("path_avoiding: start vertex is forbidden");
  VertexSet allowed = within - forbidden;
  allowed.insert(from);
  std::vector<int> parent(g.order(), -1);
  std::vector<int> queue{from};
  VertexSet seen = VertexSet::single(from);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    if (to.contains(u)) {
      PathRecord p;
      for (int v = u; v != -1; v = parent[v]) p.vertices.push_back(v);
      std::reverse(p.vertices.begin(), p.vertices.end());
      return p;
    }
    for (int v : (g.adj(u) & allowed) - seen) {
      seen.insert(v);
      parent[v] = u;
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

bool is_induced_path(const Graph& g, const std::vector<int>& seq) {
  if (seq.empty()) return false;
  if (VertexSet::from(seq).size() != static_cast<int>(seq.size())) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

bool is_hole(const Graph& g, const std::vector<int>& cycle) {
  std::size_t k = cycle.size();
  if (k < 4) return false;
  if (VertexSet::from(cycle).size() != static_cast<int>(k)) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

}  // namespace oddsign
