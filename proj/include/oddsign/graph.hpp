#ifndef ODDSIGN_GRAPH_HPP
#define ODDSIGN_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oddsign {

// Every algorithm here works on bitmask vertex sets, so graphs are capped at
// 64 vertices. The I/O layer rejects anything larger.
inline constexpr int kMaxVertices = 64;

class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet range(int n) { return VertexSet(n >= 64 ? ~0ULL : ((1ULL << n) - 1)); }
  static VertexSet single(int v) { return VertexSet(1ULL << v); }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }
  template <typename Range>
  static VertexSet from(const Range& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  std::uint64_t bits() const { return bits_; }
  bool contains(int v) const { return (bits_ >> v) & 1ULL; }
  void insert(int v) { bits_ |= 1ULL << v; }
  void erase(int v) { bits_ &= ~(1ULL << v); }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  // Least element; undefined on the empty set.
  int min() const { return std::countr_zero(bits_); }
  int max() const { return 63 - std::countl_zero(bits_); }
  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  std::vector<int> to_vector() const { return {begin(), end()}; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// Compares the ascending element sequences lexicographically.
bool lex_less(VertexSet a, VertexSet b);

std::string to_string(VertexSet s);

struct PathRecord {
  std::vector<int> vertices;

  int from() const { return vertices.front(); }
  int to() const { return vertices.back(); }
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  VertexSet members() const { return VertexSet::from(vertices); }
  VertexSet interior() const;
};

// Cyclic sequence stored from its least vertex, heading toward the smaller
// of that vertex's two hole-neighbours.
struct HoleRecord {
  std::vector<int> cycle;

  int length() const { return static_cast<int>(cycle.size()); }
  VertexSet members() const { return VertexSet::from(cycle); }
};

HoleRecord canonical_hole(std::vector<int> cycle);

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges, std::vector<std::string> labels = {});

  int order() const { return n_; }
  std::size_t size() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet adj(int v) const { return adj_[v]; }
  std::span<const int> neighbors(int v) const { return nbrs_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  int degree_in(int v, VertexSet mask) const { return (adj_[v] & mask).size(); }
  int max_degree() const;
  int max_degree_in(VertexSet mask) const;

  // N(X) without X, and N[X].
  VertexSet open_neighborhood(VertexSet x) const;
  VertexSet closed_neighborhood(VertexSet x) const { return open_neighborhood(x) | x; }

  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::pair<int, int>> edges_in(VertexSet mask) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int v) const;

  // Relabels mask's vertices densely in increasing order. old_of_new, when
  // given, receives the original index of each new vertex.
  Graph induced(VertexSet mask, std::vector<int>* old_of_new = nullptr) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  void add_edge(int u, int v);
  void finish();

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<std::string> labels_;
};

std::vector<VertexSet> components(const Graph& g, VertexSet within);
bool is_connected(const Graph& g, VertexSet within);

// N^radius[seeds], distances measured inside `within`.
VertexSet ball(const Graph& g, VertexSet seeds, int radius);
VertexSet ball(const Graph& g, VertexSet seeds, int radius, VertexSet within);

// BFS distances from v inside `within`; -1 where unreachable.
std::vector<int> distances_from(const Graph& g, int v, VertexSet within);

// Throws std::invalid_argument if x and y overlap.
bool is_anticomplete(const Graph& g, VertexSet x, VertexSet y);
bool is_complete_to(const Graph& g, VertexSet x, VertexSet y);
bool is_clique(const Graph& g, VertexSet x);

// Shortest path from `from` into `to` inside `within` minus `forbidden`.
// Shortest paths are induced, so no shortcutting pass is needed.
std::optional<PathRecord> path_avoiding(const Graph& g, int from, VertexSet to, VertexSet forbidden);
std::optional<PathRecord> path_avoiding(const Graph& g, int from, VertexSet to, VertexSet forbidden,
                                        VertexSet within);

bool is_induced_path(const Graph& g, const std::vector<int>& seq);
bool is_hole(const Graph& g, const std::vector<int>& cycle);

}  // namespace oddsign

#endif  // ODDSIGN_GRAPH_HPP
