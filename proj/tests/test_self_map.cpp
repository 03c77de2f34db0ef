#include <catch2/catch_amalgamated.hpp>

#include <memory>

#include "fixmet/self_map.hpp"

using fixmet::EnteredCycle;
using fixmet::FiniteMetricSpace;
using fixmet::MetricDraft;
using fixmet::Orbit;
using fixmet::Rational;
using fixmet::ReachedFixedPoint;
using fixmet::SelfMap;
using fixmet::Truncated;

namespace {

std::shared_ptr<const FiniteMetricSpace> unit_simplex(const std::vector<std::string>& names) {
  MetricDraft draft;
  draft.points = names;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      draft.entries.push_back({names[i], names[j], Rational(1)});
    }
  }
  return std::make_shared<const FiniteMetricSpace>(FiniteMetricSpace::from_draft(draft));
}

}  // namespace

TEST_CASE("self-maps are built from complete send tables", "[self_map]") {
  auto space = unit_simplex({"x", "y", "z"});
  SelfMap map = SelfMap::from_table(space, {{"x", "x"}, {"y", "y"}, {"z", "x"}});

  CHECK(map.size() == 3);
  CHECK(map.apply(space->require_index("z")) == space->require_index("x"));
  CHECK(map.images() == std::vector<std::size_t>{0, 1, 0});
  CHECK(map == SelfMap(space, {0, 1, 0}));
  CHECK_FALSE(map == SelfMap(space, {0, 1, 1}));

  SECTION("tables must cover every point exactly once") {
    CHECK_THROWS_AS(SelfMap::from_table(space, {{"x", "x"}, {"y", "y"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SelfMap::from_table(space, {{"x", "x"}, {"y", "y"}, {"w", "x"}}),
                    fixmet::UnknownPointError);
    CHECK_THROWS_AS(SelfMap::from_table(space, {{"x", "x"}, {"y", "y"}, {"z", "w"}}),
                    fixmet::UnknownPointError);
  }

  SECTION("image vectors are bounds-checked") {
    CHECK_THROWS_AS(SelfMap(space, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SelfMap(space, {0, 1, 3}), std::invalid_argument);
  }
}

TEST_CASE("fixed and period-two points", "[self_map]") {
  auto space = unit_simplex({"a", "b", "c", "d"});

  SelfMap fold(space, {0, 0, 1, 3});  // a fixed, b->a, c->b, d fixed
  CHECK(fixmet::fixed_points(fold) == std::vector<std::size_t>{0, 3});
  CHECK(fixmet::period_two_points(fold).empty());

  SelfMap swap(space, {1, 0, 2, 3});  // a<->b
  CHECK(fixmet::fixed_points(swap) == std::vector<std::size_t>{2, 3});
  CHECK(fixmet::period_two_points(swap) == std::vector<std::size_t>{0, 1});

  // A 4-cycle has period four, not two.
  SelfMap four(space, {1, 2, 3, 0});
  CHECK(fixmet::fixed_points(four).empty());
  CHECK(fixmet::period_two_points(four).empty());
}

TEST_CASE("orbits classify their terminus", "[self_map]") {
  auto space = unit_simplex({"a", "b", "c", "d"});

  SECTION("fixed start is a single-element orbit") {
    SelfMap map(space, {0, 0, 1, 3});
    Orbit orbit = fixmet::iterate_orbit(map, std::size_t{0}, 10);
    CHECK(orbit.sequence == std::vector<std::size_t>{0});
    CHECK(orbit.reached_fixed_point());
    CHECK(std::get<ReachedFixedPoint>(orbit.terminus) == ReachedFixedPoint{0, 0});
  }

  SECTION("a reached fixed point repeats once at the end") {
    SelfMap map(space, {0, 0, 1, 3});
    Orbit orbit = fixmet::iterate_orbit(map, "c", 10);
    CHECK(orbit.sequence == std::vector<std::size_t>{2, 1, 0, 0});
    CHECK(std::get<ReachedFixedPoint>(orbit.terminus) == ReachedFixedPoint{0, 2});
  }

  SECTION("two-cycles are reported with their entry index") {
    SelfMap map(space, {1, 0, 2, 3});
    Orbit orbit = fixmet::iterate_orbit(map, "a", 10);
    CHECK(orbit.sequence == std::vector<std::size_t>{0, 1, 0});
    auto cycle = std::get<EnteredCycle>(orbit.terminus);
    CHECK(cycle.cycle == std::vector<std::size_t>{0, 1});
    CHECK(cycle.entry_index == 0);
  }

  SECTION("tails entering a cycle keep the tail out of the cycle") {
    SelfMap map(space, {1, 2, 1, 0});  // d -> a -> b <-> c
    Orbit orbit = fixmet::iterate_orbit(map, "d", 10);
    CHECK(orbit.sequence == std::vector<std::size_t>{3, 0, 1, 2, 1});
    auto cycle = std::get<EnteredCycle>(orbit.terminus);
    CHECK(cycle.cycle == std::vector<std::size_t>{1, 2});
    CHECK(cycle.entry_index == 2);
  }

  SECTION("the step budget truncates before the repeat is seen") {
    SelfMap map(space, {0, 0, 1, 3});
    Orbit orbit = fixmet::iterate_orbit(map, "c", 2);
    CHECK(orbit.sequence == std::vector<std::size_t>{2, 1, 0});
    CHECK(std::get<Truncated>(orbit.terminus) == Truncated{2});
    // One more application sees the fixed point repeat.
    Orbit full = fixmet::iterate_orbit(map, "c", 3);
    CHECK(full.reached_fixed_point());
  }

  SECTION("start must exist and max_steps must be positive") {
    SelfMap map(space, {0, 0, 1, 3});
    CHECK_THROWS_AS(fixmet::iterate_orbit(map, "nope", 10), fixmet::UnknownPointError);
    CHECK_THROWS_AS(fixmet::iterate_orbit(map, std::size_t{9}, 10), fixmet::UnknownPointError);
    CHECK_THROWS_AS(fixmet::iterate_orbit(map, "a", 0), std::invalid_argument);
  }
}
