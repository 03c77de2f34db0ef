#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fixmet/metric_space.hpp"
#include "fixmet/rng.hpp"

namespace fixmet {

/// Shortest-path closure of a connected, positively weighted graph.
///
/// The result assigns every unordered pair the length of the shortest path
/// through the given edges, which always satisfies the metric axioms. A
/// table that already is a metric passes through unchanged. Throws
/// DisconnectedGraphError when some pair is unreachable.
inline FiniteMetricSpace metric_closure(const std::vector<std::string>& points,
                                        const std::vector<DistEntry>& edges) {
  for (const std::string& name : points) {
    if (!valid_point_name(name)) {
      throw std::invalid_argument("invalid point name '" + name + "'");
    }
  }
  std::vector<std::string> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate point name");
  }
  const std::size_t n = sorted.size();
  if (n < 3) {
    throw TooFewPointsError("metric spaces need at least 3 points");
  }

  const auto index_of = [&](const std::string& name) -> std::size_t {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), name);
    if (it == sorted.end() || *it != name) {
      throw UnknownPointError("edge names unknown point '" + name + "'");
    }
    return static_cast<std::size_t>(it - sorted.begin());
  };

  // dist[i][j]: shortest known length, nullopt = unreachable so far.
  std::vector<std::vector<std::optional<Rational>>> dist(
      n, std::vector<std::optional<Rational>>(n));
  for (std::size_t i = 0; i < n; ++i) dist[i][i] = Rational(0);

  for (const DistEntry& e : edges) {
    std::size_t i = index_of(e.a);
    std::size_t j = index_of(e.b);
    if (i == j) {
      throw std::invalid_argument("self-loop edge on '" + e.a + "'");
    }
    if (!(e.value > Rational(0))) {
      throw std::invalid_argument("edge weight must be positive: " + e.a + " " + e.b + " " +
                                  e.value.str());
    }
    if (dist[i][j] && !(*dist[i][j] == e.value)) {
      throw std::invalid_argument("conflicting duplicate edge " + e.a + " " + e.b);
    }
    dist[i][j] = e.value;
    dist[j][i] = e.value;
  }

  // Floyd-Warshall on exact rationals.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!dist[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!dist[k][j]) continue;
        Rational candidate = *dist[i][k] + *dist[k][j];
        if (!dist[i][j] || candidate < *dist[i][j]) {
          dist[i][j] = candidate;
        }
      }
    }
  }

  MetricDraft draft;
  draft.points = sorted;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!dist[i][j]) {
        throw DisconnectedGraphError("no path between '" + sorted[i] + "' and '" + sorted[j] +
                                     "'");
      }
      draft.entries.push_back({sorted[i], sorted[j], *dist[i][j]});
    }
  }
  return FiniteMetricSpace::from_draft(draft);
}

namespace detail {

inline std::string indexed_point_name(std::size_t index, std::size_t count) {
  std::size_t width = 2;
  for (std::size_t c = 100; c < count; c *= 10) ++width;
  std::string digits = std::to_string(index);
  std::string name = "p";
  name.append(width - std::min(width, digits.size()), '0');
  name += digits;
  return name;
}

/// Canonical name of a rational point on the line: exact decimal when the
/// value terminates, "p_q" otherwise (slash is not a legal name character).
inline std::string line_point_name(const Rational& value) {
  if (auto dec = value.decimal_str()) return *dec;
  std::string name = std::to_string(value.numerator());
  name += '_';
  name += std::to_string(value.denominator());
  return name;
}

}  // namespace detail

/// Deterministic random space: complete graph on n points with weights from
/// the denominator-100 grid inside weight_range, then metric closure.
inline FiniteMetricSpace random_metric_space(std::size_t n, std::uint64_t seed,
                                             const Rational& weight_lo,
                                             const Rational& weight_hi) {
  if (n < 3) throw TooFewPointsError("random_metric_space needs n >= 3");
  if (!(weight_lo > Rational(0)) || weight_hi < weight_lo) {
    throw std::invalid_argument("weight range must be positive and non-empty");
  }

  std::vector<std::string> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) points.push_back(detail::indexed_point_name(i, n));

  std::mt19937_64 engine(seed);
  std::vector<DistEntry> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.push_back({points[i], points[j], rng::uniform_grid_rational(engine, weight_lo, weight_hi)});
    }
  }
  return metric_closure(points, edges);
}

/// Finite sample of the real line with d(x, y) = |x - y|, taken on the grid
/// start, start+step, ... up to stop, united with extra_points. Points are
/// named by their exact value and keep their coordinate; the space is
/// flagged as sampled.
inline FiniteMetricSpace line_sample_space(const Rational& start, const Rational& stop,
                                           const Rational& step,
                                           const std::vector<Rational>& extra_points = {}) {
  if (!(step > Rational(0))) throw std::invalid_argument("grid step must be positive");
  if (!(start < stop)) throw std::invalid_argument("grid start must be below stop");

  std::set<Rational> values;
  for (Rational v = start; !(v > stop); v += step) values.insert(v);
  values.insert(extra_points.begin(), extra_points.end());
  if (values.size() < 3) {
    throw TooFewPointsError("line sample needs at least 3 distinct values");
  }

  std::vector<std::pair<std::string, Rational>> named;
  named.reserve(values.size());
  for (const Rational& v : values) named.emplace_back(detail::line_point_name(v), v);
  std::sort(named.begin(), named.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  FiniteMetricSpace space;
  space.sampled_ = true;
  const std::size_t n = named.size();
  space.points_.reserve(n);
  space.coords_.reserve(n);
  for (auto& [name, value] : named) {
    space.points_.push_back(name);
    space.coords_.push_back(value);
  }
  space.upper_.assign(n * (n - 1) / 2, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      space.upper_[space.pair_index(i, j)] = (space.coords_[i] - space.coords_[j]).abs();
    }
  }
  return space;
}

}  // namespace fixmet
