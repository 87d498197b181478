#include <random>

#include "doctest.h"
#include "oddsign/families.hpp"
#include "oddsign/io.hpp"
#include "oddsign/oracle.hpp"
#include "support/brute.hpp"

using namespace oddsign;
namespace fam = oddsign::families;

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" 2 ") == Rational(2));
  CHECK(parse_rational("-1/3") == Rational(-1, 3));
  CHECK(format_rational(Rational(2, 4)) == "1/2");
  CHECK(format_rational(Rational(3)) == "3/1");
  CHECK_THROWS_AS(parse_rational("1/0"), DataError);
  CHECK_THROWS_AS(parse_rational("x"), DataError);
  CHECK_THROWS_AS(parse_rational("1.5"), DataError);
  WeightAssignment w(3, VertexSet::range(3));
  CHECK_THROWS_AS(w.set(0, Rational(-1)), DataError);
}

TEST_CASE("edge list parsing") {
  GraphDocument d = parse_edge_list("c a path\n# another comment\np 3 2\ne 1 2\ne 2 3\nv 2 mid\n");
  CHECK(d.g.order() == 3);
  CHECK(d.g.adjacent(0, 1));
  CHECK(d.g.adjacent(1, 2));
  CHECK_FALSE(d.g.adjacent(0, 2));
  CHECK(d.g.label(1) == "mid");
  CHECK_FALSE(d.w);
  CHECK(d.weights().total() == 1);

  GraphDocument wd = parse_edge_list("p 3 1\ne 1 2\nw 1 1/2\nw 2 1/2\n");
  REQUIRE(wd.w);
  CHECK((*wd.w)[0] == Rational(1, 2));
  CHECK((*wd.w)[2] == 0);

  CHECK_THROWS_AS(parse_edge_list("p 3 2\ne 1 2\n"), DataError);
  CHECK_THROWS_AS(parse_edge_list("p 3 1\ne 1 4\n"), DataError);
  CHECK_THROWS_AS(parse_edge_list("p 3 1\ne 2 2\n"), DataError);
  CHECK_THROWS_AS(parse_edge_list("e 1 2\n"), DataError);
  CHECK_THROWS_AS(parse_edge_list("p 3 0\nq 1\n"), DataError);
  CHECK_THROWS_AS(parse_edge_list("p 3 1\ne 1 x\n"), DataError);
  CHECK_THROWS_AS(parse_edge_list(""), DataError);
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 40; ++i) {
    Graph g = brute::random_graph(3 + i % 12, 0.3, rng);
    GraphDocument doc{g, std::nullopt};
    if (i % 2) {
      WeightAssignment w(g.order(), g.vertices());
      for (int v = 0; v < g.order(); ++v) w.set(v, Rational(static_cast<long>(rng() % 5), 7));
      doc.w = w;
    }
    for (GraphFormat f : {GraphFormat::edge_list, GraphFormat::json}) {
      GraphDocument back = parse_graph(emit_graph(doc, f));
      CHECK(back.g == g);
      CHECK(back.w.has_value() == doc.w.has_value());
      if (doc.w)
        for (int v = 0; v < g.order(); ++v) CHECK((*back.w)[v] == (*doc.w)[v]);
    }
  }
}

TEST_CASE("json graphs") {
  GraphDocument d = parse_graph(R"({"n": 4, "edges": [[1,2],[2,3],[3,4],[4,1]]})");
  CHECK(d.g == fam::cycle(4));
  GraphDocument wrapped = parse_graph(R"({"graph": {"n": 2, "edges": [[1,2]]}, "other": 1})");
  CHECK(wrapped.g.order() == 2);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[1,3]]})"), DataError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2)"), DataError);
  CHECK_THROWS_AS(parse_graph(R"({"edges": []})"), DataError);
}

TEST_CASE("missing files") {
  try {
    read_graph("/nonexistent/graph.txt");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ExitCode::no_input);
  }
}

TEST_CASE("vertex lists are one-based") {
  Json j = vertex_list(VertexSet::of({0, 4}));
  CHECK(j == Json::array({1, 5}));
  CHECK(parse_vertex_list(j, 5) == VertexSet::of({0, 4}));
  CHECK_THROWS_AS(parse_vertex_list(Json::array({6}), 5), DataError);
}

TEST_CASE("certificate documents verify and detect tampering") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GeneratedMember m = generate_class_member(3, 12 + static_cast<int>(seed), seed, GenStrategy::constructive);
    GraphDocument doc{m.g, std::nullopt};
    WeightAssignment w = doc.weights();
    PipelineOptions opts;
    opts.mode = seed % 2 ? PipelineMode::lazy : PipelineMode::eager;
    TightResult t = compute_tight(m.g, w, Rational(1, 2), opts);
    REQUIRE(t.result.ok());
    Json cert = certificate_document(doc, Rational(1, 2), t.d, t.result, RunMetadata{seed, "test", 1000, 20, "tight"});
    VerifyReport ok = verify_certificate_document(cert);
    CHECK(ok.ok);
    CHECK(ok.status == "certified");

    Json bad = cert;
    bad["certificate"]["y"] = Json::array();
    CHECK_FALSE(verify_certificate_document(bad).ok);

    Json reparsed = Json::parse(cert.dump());
    CHECK(verify_certificate_document(reparsed).ok);
  }
}
