#include <random>

#include "doctest.h"
#include "oddsign/families.hpp"
#include "oddsign/graph.hpp"
#include "support/brute.hpp"

using namespace oddsign;
using families::cycle;
using families::path;

TEST_CASE("vertex set basics") {
  VertexSet s = VertexSet::of({3, 1, 7});
  CHECK(s.size() == 3);
  CHECK(s.min() == 1);
  CHECK(s.max() == 7);
  CHECK(s.to_vector() == std::vector<int>{1, 3, 7});
  CHECK((s - VertexSet::single(3)) == VertexSet::of({1, 7}));
  CHECK(VertexSet::range(64).size() == 64);
  CHECK(lex_less(VertexSet::of({0, 5}), VertexSet::of({1, 2})));
  CHECK(lex_less(VertexSet::of({0}), VertexSet::of({0, 1})));
  CHECK_FALSE(lex_less(VertexSet::of({0, 1}), VertexSet::of({0, 1})));
}

TEST_CASE("graph rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("components") {
  Graph p3 = path(3);
  auto cs = components(p3, VertexSet::of({0, 2}));
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == VertexSet::single(0));
  CHECK(cs[1] == VertexSet::single(2));
  CHECK(components(cycle(6), VertexSet{}).empty());
  auto whole = components(cycle(6), cycle(6).vertices());
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].size() == 6);
}

TEST_CASE("balls") {
  CHECK(ball(cycle(6), VertexSet::single(0), 2) == VertexSet::of({4, 5, 0, 1, 2}));
  CHECK(ball(path(5), VertexSet::single(2), 1) == VertexSet::of({1, 2, 3}));
  Graph pet = families::petersen();
  CHECK(ball(pet, VertexSet::of({0, 7}), 0) == VertexSet::of({0, 7}));
}

TEST_CASE("anticomplete") {
  Graph c6 = cycle(6);
  CHECK(is_anticomplete(c6, VertexSet::single(0), VertexSet::single(3)));
  CHECK_FALSE(is_anticomplete(c6, VertexSet::single(0), VertexSet::single(1)));
  CHECK(is_anticomplete(c6, VertexSet{}, c6.vertices()));
}

TEST_CASE("path avoiding") {
  Graph c6 = cycle(6);
  auto p = path_avoiding(c6, 0, VertexSet::single(3), VertexSet::single(1));
  REQUIRE(p);
  CHECK(p->vertices == std::vector<int>{0, 5, 4, 3});
  CHECK_FALSE(path_avoiding(c6, 0, VertexSet::single(3), VertexSet::of({1, 5})));
  auto q = path_avoiding(path(3), 0, VertexSet::single(2), VertexSet{});
  REQUIRE(q);
  CHECK(q->vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("induced subgraph keeps adjacency") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    Graph g = brute::random_graph(10, 0.3, rng);
    VertexSet mask(rng() & 0x3ff);
    std::vector<int> old;
    Graph h = g.induced(mask, &old);
    REQUIRE(h.order() == mask.size());
    for (int a = 0; a < h.order(); ++a)
      for (int b = 0; b < h.order(); ++b)
        if (a != b) CHECK(h.adjacent(a, b) == g.adjacent(old[a], old[b]));
  }
}

TEST_CASE("holes and induced paths") {
  CHECK(is_hole(cycle(5), {0, 1, 2, 3, 4}));
  CHECK_FALSE(is_hole(families::complete(4), {0, 1, 2, 3}));
  CHECK(is_induced_path(path(4), {0, 1, 2, 3}));
  CHECK_FALSE(is_induced_path(cycle(4), {0, 1, 2, 3}));
  HoleRecord h = canonical_hole({3, 4, 0, 1, 2});
  CHECK(h.cycle.front() == 0);
  CHECK(h.members() == VertexSet::range(5));
}
