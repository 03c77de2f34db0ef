#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "fixmet/classify.hpp"
#include "fixmet/generators.hpp"
#include "fixmet/rng.hpp"
#include "fixmet/solver.hpp"

namespace fixmet {

/// What a search is looking for: maps that lie inside every class in
/// `require_member`, outside every class in `require_nonmember`, and
/// optionally have no prime-period-2 points.
struct SeparationPredicate {
  std::set<ContractionClass> require_member;
  std::set<ContractionClass> require_nonmember;
  bool require_no_period_two = false;

  /// True when the same class is demanded on both sides, so no map can match.
  bool contradictory() const {
    for (ContractionClass cls : require_member) {
      if (require_nonmember.count(cls)) return true;
    }
    return false;
  }

  bool matches(const SelfMap& map, const std::vector<ClassReport>& reports) const {
    for (const ClassReport& report : reports) {
      if (require_member.count(report.cls) && !report.member) return false;
      if (require_nonmember.count(report.cls) && report.member) return false;
    }
    if (require_no_period_two && !period_two_points(map).empty()) return false;
    return true;
  }
};

/// A matching instance along with its full classification and theorem verdict.
struct SearchHit {
  SelfMap map;
  std::vector<ClassReport> reports;
  TheoremVerdict verdict;
};

struct SearchResult {
  std::optional<SearchHit> hit;
  std::uint64_t trials_used = 0;
  std::uint64_t seed = 0;
};

namespace detail {

inline SearchHit make_hit(SelfMap map) {
  std::vector<ClassReport> reports = classify_all(map);
  TheoremVerdict verdict = theorem_check(map);
  return SearchHit{std::move(map), std::move(reports), std::move(verdict)};
}

}  // namespace detail

/// Enumerates every self-map of `space` in lexicographic image order and
/// returns the first one matching `predicate`. Throws SpaceTooLargeError when
/// n^n exceeds `cap` — exhaustive search is only meant for small spaces.
inline std::optional<SearchHit> enumerate_maps(std::shared_ptr<const FiniteMetricSpace> space,
                                               const SeparationPredicate& predicate,
                                               std::uint64_t cap = 10'000'000) {
  const std::size_t n = space->size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / n) throw SpaceTooLargeError("map enumeration exceeds cap");
    total *= n;
  }
  if (predicate.contradictory()) return std::nullopt;

  std::vector<std::size_t> images(n, 0);
  while (true) {
    SelfMap map(space, images);
    std::vector<ClassReport> reports = classify_all(map);
    if (predicate.matches(map, reports)) {
      TheoremVerdict verdict = theorem_check(map);
      return SearchHit{std::move(map), std::move(reports), std::move(verdict)};
    }
    // Odometer increment over base-n digit strings.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++images[pos] < n) break;
      images[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
  }
}

/// Draws random spaces (complete graphs with grid weights, closed to a
/// metric) and random self-maps, returning the first match. Deterministic in
/// `seed`: the master engine hands each trial a space seed and the map images.
inline SearchResult random_search(std::size_t n_points, std::uint64_t trials, std::uint64_t seed,
                                  const SeparationPredicate& predicate) {
  if (n_points < 3) throw TooFewPointsError("search requires spaces with at least 3 points");
  SearchResult result;
  result.seed = seed;
  if (predicate.contradictory()) return result;

  std::mt19937_64 master(seed);
  const Rational weight_lo(1, 2);
  const Rational weight_hi(5, 2);

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    result.trials_used = trial + 1;
    const std::uint64_t space_seed = master();
    auto space = std::make_shared<const FiniteMetricSpace>(
        random_metric_space(n_points, space_seed, weight_lo, weight_hi));
    std::vector<std::size_t> images(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
      images[i] = rng::uniform_below(master, n_points);
    }
    SelfMap map(space, images);
    std::vector<ClassReport> reports = classify_all(map);
    if (predicate.matches(map, reports)) {
      TheoremVerdict verdict = theorem_check(map);
      result.hit = SearchHit{std::move(map), std::move(reports), std::move(verdict)};
      return result;
    }
  }
  return result;
}

}  // namespace fixmet
