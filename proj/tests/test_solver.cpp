#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <random>
#include <variant>

#include "fixmet/generators.hpp"
#include "fixmet/solver.hpp"

using fixmet::DecayCertificate;
using fixmet::FiniteMetricSpace;
using fixmet::MetricDraft;
using fixmet::PicardRun;
using fixmet::Rational;
using fixmet::SelfMap;

namespace {

SelfMap hexagon_funnel() {
  auto space = fixmet::metric_closure(
      {"A", "B", "C", "D", "E", "F"},
      {{"A", "B", 1}, {"A", "C", 1}, {"B", "C", 1}, {"B", "D", 1},
       {"C", "E", 1}, {"D", "E", 1}, {"D", "F", 1}, {"E", "F", 1}});
  auto shared = std::make_shared<const FiniteMetricSpace>(std::move(space));
  return SelfMap::from_table(shared, {{"A", "F"}, {"B", "D"}, {"C", "E"},
                                      {"D", "F"}, {"E", "F"}, {"F", "F"}});
}

SelfMap equilateral_map(std::vector<std::size_t> images) {
  MetricDraft draft;
  draft.points = {"x", "y", "z"};
  draft.entries = {{"x", "y", 1}, {"y", "z", 1}, {"z", "x", 1}};
  auto space = std::make_shared<const FiniteMetricSpace>(FiniteMetricSpace::from_draft(draft));
  return SelfMap(space, std::move(images));
}

}  // namespace

TEST_CASE("picard run on the hexagon funnel from B", "[solver]") {
  SelfMap map = hexagon_funnel();
  const FiniteMetricSpace& space = map.space();
  const std::size_t B = space.require_index("B");
  const std::size_t D = space.require_index("D");
  const std::size_t F = space.require_index("F");

  PicardRun run = fixmet::picard_solve(map, "B", 100);

  CHECK(run.orbit.start == B);
  CHECK(run.orbit.sequence == std::vector<std::size_t>{B, D, F, F});
  REQUIRE(run.orbit.reached_fixed_point());
  auto terminus = std::get<fixmet::ReachedFixedPoint>(run.orbit.terminus);
  CHECK(terminus.point == F);
  CHECK(terminus.steps == 2);

  const DecayCertificate& cert = run.certificate;
  CHECK(cert.lambda == Rational(1, 3));
  REQUIRE(cert.alpha.has_value());
  CHECK(*cert.alpha == Rational(1, 2));
  CHECK(cert.applicable());

  REQUIRE(cert.steps.size() == 2);
  CHECK(cert.steps[0].index == 0);
  CHECK(cert.steps[0].value == Rational(4));
  CHECK_FALSE(cert.steps[0].applicable);  // no predecessor triple
  CHECK(cert.steps[1].index == 1);
  CHECK(cert.steps[1].value == Rational(2));
  CHECK(cert.steps[1].applicable);
  CHECK(cert.violations.empty());  // 2 <= (1/2) * 4, with equality
}

TEST_CASE("every start of the hexagon funnel reaches F within two steps", "[solver]") {
  SelfMap map = hexagon_funnel();
  const std::size_t F = map.space().require_index("F");
  for (std::size_t start = 0; start < map.space().size(); ++start) {
    PicardRun run = fixmet::picard_solve(map, start, 100);
    REQUIRE(run.orbit.reached_fixed_point());
    auto terminus = std::get<fixmet::ReachedFixedPoint>(run.orbit.terminus);
    CHECK(terminus.point == F);
    CHECK(terminus.steps <= 2);
    CHECK(run.certificate.violations.empty());
  }
}

TEST_CASE("orbits too short for the perimeter sequence carry no steps", "[solver]") {
  SelfMap map = hexagon_funnel();

  SECTION("a fixed starting point yields a single-element orbit") {
    PicardRun run = fixmet::picard_solve(map, "F", 100);
    CHECK(run.orbit.sequence.size() == 1);
    CHECK(run.certificate.steps.empty());
    CHECK(run.certificate.violations.empty());
  }

  SECTION("truncation after one application leaves two elements") {
    PicardRun run = fixmet::picard_solve(map, "B", 1);
    CHECK(run.orbit.sequence.size() == 2);
    REQUIRE(std::holds_alternative<fixmet::Truncated>(run.orbit.terminus));
    CHECK(run.certificate.steps.empty());
  }
}

TEST_CASE("caller-chosen coefficients gate the certificate", "[solver]") {
  SelfMap map = hexagon_funnel();

  SECTION("lambda at or above one half asserts nothing") {
    for (Rational lambda : {Rational(1, 2), Rational(3, 4), Rational(2)}) {
      PicardRun run = fixmet::picard_solve_with_lambda(
          map, map.space().require_index("B"), 100, lambda);
      CHECK(run.certificate.lambda == lambda);
      CHECK_FALSE(run.certificate.alpha.has_value());
      CHECK_FALSE(run.certificate.applicable());
      CHECK(run.certificate.violations.empty());
      CHECK(run.certificate.steps.size() == 2);  // steps are still reported
    }
  }

  SECTION("a coefficient below the optimum produces a violation") {
    PicardRun run = fixmet::picard_solve_with_lambda(
        map, map.space().require_index("B"), 100, Rational(1, 10));
    REQUIRE(run.certificate.alpha.has_value());
    CHECK(*run.certificate.alpha == Rational(1, 9));
    // d_1 = 2 > (1/9) * d_0 = 4/9 at the applicable index 1.
    CHECK(run.certificate.violations == std::vector<std::size_t>{1});
  }

  SECTION("lambda zero gives alpha zero") {
    PicardRun run = fixmet::picard_solve_with_lambda(
        map, map.space().require_index("F"), 100, Rational(0));
    REQUIRE(run.certificate.alpha.has_value());
    CHECK(*run.certificate.alpha == Rational(0));
  }
}

TEST_CASE("a period-two orbit terminates in a cycle without decay claims", "[solver]") {
  SelfMap swap = equilateral_map({1, 0, 2});  // x <-> y, z fixed
  PicardRun run = fixmet::picard_solve(swap, std::size_t{0}, 100);

  CHECK(run.orbit.sequence == std::vector<std::size_t>{0, 1, 0});
  REQUIRE(std::holds_alternative<fixmet::EnteredCycle>(run.orbit.terminus));
  auto cycle = std::get<fixmet::EnteredCycle>(run.orbit.terminus);
  CHECK(cycle.cycle == std::vector<std::size_t>{0, 1});
  CHECK(cycle.entry_index == 0);

  // The swap's optimal generalized Chatterjea coefficient is 3/4, so the
  // certificate carries no alpha and flags nothing.
  CHECK(run.certificate.lambda == Rational(3, 4));
  CHECK_FALSE(run.certificate.alpha.has_value());
  CHECK(run.certificate.violations.empty());
}

TEST_CASE("theorem check on the worked instances", "[solver][theorem]") {
  SECTION("equilateral fold: hypotheses hold, two fixed points") {
    SelfMap fold = equilateral_map({0, 1, 0});
    fixmet::TheoremVerdict verdict = fixmet::theorem_check(fold);
    CHECK(verdict.hypothesis_no_period_two);
    CHECK(verdict.hypothesis_class_member);
    CHECK(verdict.hypotheses_hold());
    CHECK(verdict.fixed_point_set == std::vector<std::size_t>{0, 1});
    CHECK(verdict.conclusion_holds);
    CHECK_FALSE(verdict.counterexample.has_value());
  }

  SECTION("hexagon funnel: hypotheses hold, one fixed point") {
    SelfMap map = hexagon_funnel();
    fixmet::TheoremVerdict verdict = fixmet::theorem_check(map);
    CHECK(verdict.hypotheses_hold());
    CHECK(verdict.fixed_point_set ==
          std::vector<std::size_t>{map.space().require_index("F")});
    CHECK(verdict.conclusion_holds);
  }

  SECTION("swap map: period-two points defeat hypothesis (i)") {
    SelfMap swap = equilateral_map({1, 0, 2});
    fixmet::TheoremVerdict verdict = fixmet::theorem_check(swap);
    CHECK_FALSE(verdict.hypothesis_no_period_two);
    CHECK_FALSE(verdict.hypothesis_class_member);
    CHECK(verdict.fixed_point_set == std::vector<std::size_t>{2});
    CHECK(verdict.conclusion_holds);  // vacuously
    CHECK_FALSE(verdict.counterexample.has_value());
  }

  SECTION("identity map: three fixed points but hypotheses fail, so vacuous") {
    SelfMap identity = equilateral_map({0, 1, 2});
    fixmet::TheoremVerdict verdict = fixmet::theorem_check(identity);
    CHECK(verdict.hypothesis_no_period_two);
    CHECK_FALSE(verdict.hypothesis_class_member);
    CHECK(verdict.fixed_point_set.size() == 3);
    CHECK(verdict.conclusion_holds);
  }
}

TEST_CASE("members never violate their own certificate", "[solver][property]") {
  std::mt19937_64 rng(16180);
  int member_orbits = 0;
  for (int round = 0; round < 120; ++round) {
    const std::size_t n = 3 + rng() % 4;
    auto space = std::make_shared<const FiniteMetricSpace>(
        fixmet::random_metric_space(n, rng(), Rational(1, 2), Rational(5, 2)));
    std::vector<std::size_t> images(n);
    for (auto& img : images) img = rng() % n;
    SelfMap map(space, images);

    fixmet::ClassReport report =
        fixmet::classify(map, fixmet::ContractionClass::GeneralizedChatterjea);
    if (!report.member) continue;

    for (std::size_t start = 0; start < n; ++start) {
      PicardRun run = fixmet::picard_solve(map, start, 4 * n);
      INFO("round " << round << " start " << start);
      CHECK(run.certificate.applicable());
      CHECK(run.certificate.violations.empty());
      ++member_orbits;
    }

    fixmet::TheoremVerdict verdict = fixmet::theorem_check(map);
    if (verdict.hypotheses_hold()) {
      CHECK(verdict.fixed_point_set.size() >= 1);
      CHECK(verdict.fixed_point_set.size() <= 2);
      CHECK(verdict.conclusion_holds);
    }
  }
  CHECK(member_orbits > 30);
}
