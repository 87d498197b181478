#include "doctest.h"
#include "oddsign/balanced.hpp"
#include "oddsign/families.hpp"
#include "oddsign/oracle.hpp"
#include "oddsign/pipeline.hpp"
#include "oddsign/separation.hpp"
#include "support/brute.hpp"

using namespace oddsign;
namespace fam = oddsign::families;

TEST_CASE("parameters") {
  CHECK(delta_of(3, 2) == 45);
  PipelineParams p = params_for(3, Rational(0));
  CHECK(p.f2 == 33);
  CHECK(p.d == 49 * 3 + 4 * 33 * 3 - 4);
  CHECK(p.d == 539);
  CHECK(p.satisfiable);
  CHECK(p.c < 1);
  CHECK(p.c >= Rational(1, 2));
}

TEST_CASE("balanced separator verification") {
  Graph c6 = fam::cycle(6);
  WeightAssignment w = WeightAssignment::uniform(c6);
  CHECK_FALSE(verify_balanced_separator(c6, c6.vertices(), w, VertexSet{}, Rational(1, 2), 3).ok);
  BalancedAudit all = verify_balanced_separator(c6, c6.vertices(), w, c6.vertices(), Rational(1, 2), 3);
  CHECK(all.ok);
  CHECK(all.components.empty());
  BalancedAudit a = verify_balanced_separator(c6, c6.vertices(), w, VertexSet::of({0, 3}), Rational(1, 2), 3);
  CHECK(a.ok);
  CHECK(a.centers.size() == 1);
  for (const Rational& r : a.weights) CHECK(r == Rational(1, 3));
  CHECK(brute::is_d_bounded(c6, c6.vertices(), VertexSet::of({0, 3}), 1) == false);
  CHECK(brute::is_d_bounded(c6, c6.vertices(), VertexSet::of({0, 3}), 3));
}

TEST_CASE("star separator") {
  Graph s = fam::star(4);
  WeightAssignment w = WeightAssignment::uniform(s);
  PipelineResult r = compute_balanced_separator(s, w, Rational(1, 2), 1);
  REQUIRE(r.ok());
  CHECK(r.certificate->y == VertexSet::single(0));
  CHECK(r.certificate->components.size() == 4);
  for (const Rational& x : r.certificate->weights) CHECK(x == Rational(1, 5));
}

TEST_CASE("six-cycle separator is minimum") {
  Graph c6 = fam::cycle(6);
  WeightAssignment w = WeightAssignment::uniform(c6);
  PipelineResult r = compute_balanced_separator(c6, w, Rational(1, 2), 3);
  REQUIRE(r.ok());
  auto best = brute::min_balanced_separator(c6, w, Rational(1, 2), 3);
  REQUIRE(best);
  CHECK(r.certificate->y.size() == best->size());
  CHECK(verify_balanced_separator(c6, c6.vertices(), w, r.certificate->y, Rational(1, 2), 3).ok);
}

TEST_CASE("driver rejects bad input") {
  Graph pet = fam::petersen();
  CHECK_THROWS_AS(compute_balanced_separator(pet, WeightAssignment::uniform(pet), Rational(1, 2), 3), DataError);
  Graph two(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(compute_balanced_separator(two, WeightAssignment::uniform(two), Rational(1, 2), 3), DataError);
  Graph c5 = fam::cycle(5);
  WeightAssignment heavy(5, c5.vertices());
  heavy.set(0, 2);
  CHECK_THROWS_AS(compute_balanced_separator(c5, heavy, Rational(1, 2), 3), DataError);
  CHECK_THROWS_AS(compute_balanced_separator(c5, WeightAssignment::uniform(c5), Rational(1, 3), 3), DataError);
}

TEST_CASE("phases on small graphs") {
  PipelineOptions lazy;
  lazy.mode = PipelineMode::lazy;
  SUBCASE("six-cycle has no clique cutset") {
    Graph c6 = fam::cycle(6);
    DecompTrace t;
    t.levels.push_back(Level{c6.vertices(), WeightAssignment::uniform(c6), 3});
    WorkBudget b;
    PhaseOutcome out = clique_free_bag(c6, t, Rational(1, 2), lazy, b);
    CHECK(out.status == PhaseOutcome::completed);
    CHECK(t.levels.size() == 1);
  }
  SUBCASE("path") {
    Graph p5 = fam::path(5);
    DecompTrace t;
    t.levels.push_back(Level{p5.vertices(), WeightAssignment::uniform(p5), 3});
    WorkBudget b;
    PhaseOutcome out = clique_free_bag(p5, t, Rational(1, 2), lazy, b);
    if (out.status == PhaseOutcome::completed) {
      CHECK_FALSE(has_clique_cutset(p5, t.levels.back().bag));
    } else {
      REQUIRE(out.status == PhaseOutcome::shortcut);
      const Level& l = t.levels[out.level];
      CHECK(verify_balanced_separator(p5, l.bag, l.w, out.y, Rational(1, 2), l.d).ok);
    }
    for (const Level& l : t.levels) CHECK(l.w.total() == 1);
  }
  SUBCASE("clean graph skips the strong phase") {
    Graph lp = fam::pyramid(3, 3, 4);
    DecompTrace t;
    t.levels.push_back(Level{lp.vertices(), WeightAssignment::uniform(lp), 3});
    WorkBudget b;
    PhaseOutcome out = forcer_decomposition(lp, t, Rational(1, 2), ForcerFamily::strong, lazy, b);
    CHECK(out.status == PhaseOutcome::completed);
    CHECK(t.levels.size() == 1);
  }
}

TEST_CASE("generated members: certificates, lifts and weights") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    int delta = 3 + static_cast<int>(seed % 2);
    GeneratedMember m = generate_class_member(delta, 10 + static_cast<int>(seed % 15), seed, GenStrategy::constructive);
    WeightAssignment w = WeightAssignment::uniform(m.g);
    for (PipelineMode mode : {PipelineMode::eager, PipelineMode::lazy}) {
      PipelineOptions opts;
      opts.mode = mode;
      TightResult t = compute_tight(m.g, w, Rational(1, 2), opts);
      REQUIRE(t.result.ok());
      CHECK(static_cast<int>(t.attempts.size()) == t.d);
      const auto& cert = *t.result.certificate;
      CHECK(verify_balanced_separator(m.g, m.g.vertices(), w, cert.y, Rational(1, 2), t.d).ok);
      CHECK(brute::is_balanced(m.g, m.g.vertices(), w, cert.y, Rational(1, 2)));
      CHECK(cert.y.subset_of(cert.lifted));
      for (const LiftRecord& l : t.result.trace.lifts) CHECK(l.verified);
      for (const Level& l : t.result.trace.levels) {
        CHECK(l.w.total() == 1);
        CHECK(l.w.domain() == l.bag);
      }
      for (std::size_t i = 1; i < t.result.trace.levels.size(); ++i)
        CHECK(t.result.trace.levels[i].bag.subset_of(t.result.trace.levels[i - 1].bag));
    }
  }
}
