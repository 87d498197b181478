#include <algorithm>
#include <random>

#include "oddsign/detect.hpp"
#include "oddsign/oracle.hpp"

namespace oddsign {

const char* to_string(GenStrategy s) { return s == GenStrategy::rejection ? "rejection" : "constructive"; }

namespace {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct Builder {
  int delta;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> deg;
  std::vector<VertexSet> adj;

  explicit Builder(int d) : delta(d) {}

  int vertex() {
    deg.push_back(0);
    adj.emplace_back();
    return n++;
  }
  bool can_link(int u, int v) const { return u != v && !adj[u].contains(v) && deg[u] < delta && deg[v] < delta; }
  void link(int u, int v) {
    edges.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<int> path(int from, int length) {
    std::vector<int> out{from};
    for (int i = 0; i < length; ++i) {
      int v = vertex();
      link(out.back(), v);
      out.push_back(v);
    }
    return out;
  }
  Graph graph() const { return Graph(n, edges); }
  int free_vertex(Rng& rng, int slack = 1) const {
    std::vector<int> open;
    for (int v = 0; v < n; ++v)
      if (deg[v] + slack <= delta) open.push_back(v);
    if (open.empty()) return -1;
    return open[uniform_int(rng, 0, static_cast<int>(open.size()) - 1)];
  }
};

bool member(const Graph& g) {
  WorkBudget budget;
  return is_c4free_odd_signable(g, budget).member();
}

// Templates return their own vertex count, or 0 when they do not fit.
int add_hole(Builder& b, int len) {
  int first = b.vertex(), prev = first;
  for (int i = 1; i < len; ++i) {
    int v = b.vertex();
    b.link(prev, v);
    prev = v;
  }
  b.link(prev, first);
  return len;
}

// Pyramid with apex a; returns a and the chosen triangle vertex on path 3.
std::pair<int, int> add_pyramid(Builder& b, int l1, int l2, int l3) {
  int a = b.vertex();
  int t[3] = {b.vertex(), b.vertex(), b.vertex()};
  b.link(t[0], t[1]);
  b.link(t[1], t[2]);
  b.link(t[0], t[2]);
  int ls[3] = {l1, l2, l3};
  for (int i = 0; i < 3; ++i) {
    auto p = b.path(a, ls[i] - 1);
    b.link(p.back(), t[i]);
  }
  return {a, t[2]};
}

// Hole of length len plus a hub over the given hole positions.
void add_wheel(Builder& b, int len, const std::vector<int>& spokes) {
  int base = b.n;
  add_hole(b, len);
  int hub = b.vertex();
  for (int s : spokes) b.link(hub, base + s);
}

std::string add_template(Builder& b, Rng& rng, int room) {
  int delta = b.delta;
  std::vector<int> choices;
  if (room >= 4) choices.push_back(0);                     // hole
  if (delta >= 3 && room >= 7) choices.push_back(1);       // long pyramid
  if (delta >= 3 && room >= 8) choices.push_back(2);       // proper wheel
  if (delta >= 3 && room >= 6) choices.push_back(3);       // twin wheel
  if (delta >= 3 && room >= 7) choices.push_back(4);       // short pyramid wheel
  if (delta >= 3 && room >= 12) choices.push_back(5);      // two pyramid sides joined
  if (delta >= 3 && room >= 3) choices.push_back(6);       // clique
  if (delta == 2 && room >= 1) choices.push_back(7);       // path, grown by pendants
  if (choices.empty()) {
    b.path(b.vertex(), room - 1);
    return "path(" + std::to_string(room) + ")";
  }
  int pick = choices[uniform_int(rng, 0, static_cast<int>(choices.size()) - 1)];
  switch (pick) {
    case 0: {
      // With delta 2 nothing can attach to a hole, so it has to fill the room.
      int len = delta == 2 ? room : uniform_int(rng, 4, std::min(room, 12));
      add_hole(b, len);
      return "hole(" + std::to_string(len) + ")";
    }
    case 1: {
      int l1 = 2, l2 = 2, l3 = 2;
      for (int extra = uniform_int(rng, 0, std::min(room - 7, 6)); extra > 0; --extra)
        ++(uniform_int(rng, 0, 2) == 0 ? l1 : uniform_int(rng, 0, 1) ? l2 : l3);
      add_pyramid(b, l1, l2, l3);
      return "pyramid(" + std::to_string(l1) + "," + std::to_string(l2) + "," + std::to_string(l3) + ")";
    }
    case 2: {
      int len = uniform_int(rng, 7, std::min(room - 1, 14));
      std::vector<int> spokes{0};
      int a = uniform_int(rng, 2, len - 4);
      int c = uniform_int(rng, a + 2, len - 2);
      spokes.push_back(a);
      spokes.push_back(c);
      add_wheel(b, len, spokes);
      return "proper_wheel(" + std::to_string(len) + ")";
    }
    case 3: {
      int len = uniform_int(rng, 5, std::min(room - 1, 12));
      add_wheel(b, len, {0, 1, 2});
      return "twin_wheel(" + std::to_string(len) + ")";
    }
    case 4: {
      int len = uniform_int(rng, 6, std::min(room - 1, 12));
      add_wheel(b, len, {0, 1, uniform_int(rng, 3, len - 2)});
      return "short_pyramid(" + std::to_string(len) + ")";
    }
    case 5: {
      int tail1 = uniform_int(rng, 0, 2), tail2 = uniform_int(rng, 0, 2);
      int l = room >= 16 ? 3 : 2;
      auto [a1, t1] = add_pyramid(b, l, 2, 2);
      int e1 = b.path(t1, tail1).back();
      auto [a2, t2] = add_pyramid(b, 2, l, 2);
      int e2 = b.path(t2, tail2).back();
      b.link(a1, a2);
      b.link(e1, e2);
      return "pyramid_2join";
    }
    case 7: {
      int len = uniform_int(rng, 1, room);
      b.path(b.vertex(), len - 1);
      return "path(" + std::to_string(len) + ")";
    }
    default: {
      int k = uniform_int(rng, 3, std::min(delta + 1, std::min(room, 5)));
      int base = b.n;
      for (int i = 0; i < k; ++i) b.vertex();
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) b.link(base + i, base + j);
      return "clique(" + std::to_string(k) + ")";
    }
  }
}

// Grows one constructive candidate; may overshoot or break membership,
// which the caller rejects.
std::optional<Graph> constructive_draw(int delta, int n, Rng& rng, std::string& recipe) {
  Builder b(delta);
  recipe = add_template(b, rng, n);
  int guard = 0;
  while (b.n < n && ++guard < 200) {
    int room = n - b.n;
    int op = uniform_int(rng, 0, 9);
    if (op < 4 && room >= 1) {
      // Ear between two existing vertices; kept only if the class survives.
      int u = b.free_vertex(rng), v = b.free_vertex(rng);
      if (u < 0 || v < 0 || u == v) continue;
      int len = uniform_int(rng, 1, std::min(room + 1, 6));
      if (len == 1 && !b.can_link(u, v)) continue;
      Builder trial = b;
      auto p = trial.path(u, len - 1);
      if (!trial.can_link(p.back(), v)) continue;
      trial.link(p.back(), v);
      if (!member(trial.graph())) continue;
      b = trial;
      recipe += "+ear(" + std::to_string(len) + ")";
    } else if (op < 7 && room >= 3) {
      int u = b.free_vertex(rng);
      if (u < 0) break;
      Builder trial = b;
      int first = trial.n;
      std::string piece = add_template(trial, rng, room);
      std::vector<int> open;
      for (int v = first; v < trial.n; ++v)
        if (trial.deg[v] < delta) open.push_back(v);
      if (open.empty()) continue;
      trial.link(u, open[uniform_int(rng, 0, static_cast<int>(open.size()) - 1)]);
      b = trial;
      recipe += "+bridge:" + piece;
    } else {
      int u = b.free_vertex(rng);
      if (u < 0) break;
      int len = uniform_int(rng, 1, std::min(room, 3));
      b.path(u, len);
      recipe += "+pendant(" + std::to_string(len) + ")";
    }
  }
  if (b.n != n) return std::nullopt;
  return b.graph();
}

std::optional<Graph> rejection_draw(int delta, int n, Rng& rng) {
  Builder b(delta);
  b.vertex();
  for (int v = 1; v < n; ++v) {
    int u = b.free_vertex(rng);
    if (u < 0) return std::nullopt;
    b.vertex();
    b.link(u, v);
  }
  int extra = uniform_int(rng, 0, n / 2);
  for (int i = 0; i < extra; ++i) {
    int u = b.free_vertex(rng), v = b.free_vertex(rng);
    if (u >= 0 && v >= 0 && b.can_link(u, v)) b.link(u, v);
  }
  return b.graph();
}

}  // namespace

GeneratedMember generate_class_member(int delta, int n, std::uint64_t seed, GenStrategy strategy, int max_attempts) {
  if (delta < 2) throw std::invalid_argument("generate_class_member: delta must be at least 2");
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("generate_class_member: n out of range");
  Rng rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::string recipe = "random";
    auto g = strategy == GenStrategy::rejection ? rejection_draw(delta, n, rng) : constructive_draw(delta, n, rng, recipe);
    if (!g || !is_connected(*g, g->vertices()) || g->max_degree() > delta || !member(*g)) continue;
    return GeneratedMember{*g, recipe, attempt};
  }
  throw CapExceeded("generate_class_member: no member after " + std::to_string(max_attempts) + " draws (delta=" +
                    std::to_string(delta) + ", n=" + std::to_string(n) + ")");
}

}  // namespace oddsign
