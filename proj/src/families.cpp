#include "oddsign/families.hpp"

#include <stdexcept>

namespace oddsign::families {

namespace {

using Edges = std::vector<std::pair<int, int>>;

// Appends a path from a to b with `length` edges, allocating interior
// vertices from next.
void add_path(Edges& es, int a, int b, int length, int& next) {
  if (length < 1) throw std::invalid_argument("path length must be positive");
  int prev = a;
  for (int i = 1; i < length; ++i) {
    es.emplace_back(prev, next);
    prev = next++;
  }
  es.emplace_back(prev, b);
}

}  // namespace

Graph path(int n) {
  Edges es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph cycle(int n) {
  Edges es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

Graph complete(int n) {
  Edges es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph empty(int n) { return Graph(n); }

Graph star(int leaves) {
  Edges es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph(leaves + 1, es);
}

Graph complete_bipartite(int a, int b) {
  Edges es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return Graph(a + b, es);
}

Graph petersen() {
  Edges es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, es);
}

Graph triangular_prism() { return prism(1, 1, 1); }

Graph wheel(int hole_length, std::initializer_list<int> spokes) {
  Edges es;
  for (int i = 0; i < hole_length; ++i) es.emplace_back(i, (i + 1) % hole_length);
  for (int s : spokes) es.emplace_back(hole_length, s);
  return Graph(hole_length + 1, es);
}

Graph pyramid(int l1, int l2, int l3) {
  Edges es{{1, 2}, {1, 3}, {2, 3}};
  int next = 4;
  add_path(es, 0, 1, l1, next);
  add_path(es, 0, 2, l2, next);
  add_path(es, 0, 3, l3, next);
  return Graph(next, es);
}

Graph prism(int l1, int l2, int l3) {
  Edges es{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  int next = 6;
  add_path(es, 0, 3, l1, next);
  add_path(es, 1, 4, l2, next);
  add_path(es, 2, 5, l3, next);
  return Graph(next, es);
}

Graph theta(int l1, int l2, int l3) {
  if (l1 < 2 || l2 < 2 || l3 < 2) throw std::invalid_argument("theta paths need length >= 2");
  Edges es;
  int next = 2;
  add_path(es, 0, 1, l1, next);
  add_path(es, 0, 1, l2, next);
  add_path(es, 0, 1, l3, next);
  return Graph(next, es);
}

}  // namespace oddsign::families
