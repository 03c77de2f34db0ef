#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fixmet/errors.hpp"
#include "fixmet/rational.hpp"

namespace fixmet {

/// Point names may use letters, digits, underscore, dot and minus.
inline bool valid_point_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '.' || c == '-';
    if (!ok) return false;
  }
  return true;
}

struct DistEntry {
  std::string a;
  std::string b;
  Rational value;
};

/// Raw candidate for a finite metric space, prior to validation.
/// Entries are directed as given; validate_metric reports what is wrong.
struct MetricDraft {
  std::vector<std::string> points;
  std::vector<DistEntry> entries;
};

enum class ViolationKind {
  NonZeroDiagonal,
  NonPositive,
  Asymmetric,
  TriangleViolation,
  TooFewPoints,
  MissingPair,
};

inline std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NonZeroDiagonal: return "non-zero-diagonal";
    case ViolationKind::NonPositive: return "non-positive";
    case ViolationKind::Asymmetric: return "asymmetric";
    case ViolationKind::TriangleViolation: return "triangle-violation";
    case ViolationKind::TooFewPoints: return "too-few-points";
    case ViolationKind::MissingPair: return "missing-pair";
  }
  return "unknown";
}

struct MetricViolation {
  ViolationKind kind;
  std::vector<std::string> witness;  // 1-3 point names
  std::vector<Rational> values;      // the offending values

  std::string describe() const {
    std::string out{to_string(kind)};
    out += " (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i > 0) out += ",";
      out += witness[i];
    }
    out += ")";
    if (!values.empty()) {
      out += " values";
      for (std::size_t i = 0; i < values.size(); ++i) {
        out += i == 0 ? " " : ", ";
        out += values[i].str();
      }
    }
    return out;
  }

  friend bool operator==(const MetricViolation& a, const MetricViolation& b) {
    return a.kind == b.kind && a.witness == b.witness && a.values == b.values;
  }
};

/// Checks the metric axioms on a draft. The result is empty exactly when the
/// draft describes a finite metric space with at least three points. All
/// violations are reported, sorted by (kind, witness).
std::vector<MetricViolation> validate_metric(const MetricDraft& draft);

class InvalidMetricError : public Error {
public:
  explicit InvalidMetricError(std::vector<MetricViolation> violations)
      : Error(summary(violations)), violations_(std::move(violations)) {}

  const std::vector<MetricViolation>& violations() const noexcept { return violations_; }

private:
  static std::string summary(const std::vector<MetricViolation>& violations) {
    if (violations.empty()) return "invalid metric";
    std::string out = "invalid metric: " + violations.front().describe();
    if (violations.size() > 1) {
      out += " (+" + std::to_string(violations.size() - 1) + " more)";
    }
    return out;
  }

  std::vector<MetricViolation> violations_;
};

/// Immutable finite metric space over named points with exact rational
/// distances. Points are kept in lexicographic byte order and every
/// unordered pair is stored exactly once.
class FiniteMetricSpace {
public:
  /// Validates the draft and builds the space; throws InvalidMetricError
  /// carrying the full violation list when the axioms fail.
  static FiniteMetricSpace from_draft(const MetricDraft& draft);

  std::size_t size() const noexcept { return points_.size(); }

  const std::string& point(std::size_t i) const { return points_[i]; }

  const std::vector<std::string>& points() const noexcept { return points_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), name);
    if (it == points_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
  }

  /// Index of a name that must exist; throws UnknownPointError otherwise.
  std::size_t require_index(std::string_view name) const {
    auto idx = index_of(name);
    if (!idx) throw UnknownPointError("unknown point '" + std::string(name) + "'");
    return *idx;
  }

  const Rational& dist(std::size_t i, std::size_t j) const {
    if (i == j) return zero_;
    return upper_[pair_index(i, j)];
  }

  const Rational& dist(std::string_view a, std::string_view b) const {
    return dist(require_index(a), require_index(b));
  }

  /// True for spaces sampled from the real line; classification reports on
  /// such spaces are lower bounds for the underlying infinite space.
  bool sampled() const noexcept { return sampled_; }

  /// Real-line coordinate of a point, present only for sampled spaces.
  std::optional<Rational> coordinate(std::size_t i) const {
    if (coords_.empty()) return std::nullopt;
    return coords_[i];
  }

  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    return a.points_ == b.points_ && a.upper_ == b.upper_ && a.coords_ == b.coords_ &&
           a.sampled_ == b.sampled_;
  }

private:
  friend FiniteMetricSpace line_sample_space(const Rational&, const Rational&, const Rational&,
                                             const std::vector<Rational>&);

  FiniteMetricSpace() = default;

  // i < j required.
  std::size_t pair_index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    const std::size_t n = points_.size();
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  }

  static const Rational zero_;

  std::vector<std::string> points_;  // sorted lexicographically
  std::vector<Rational> upper_;      // one entry per unordered pair, i < j
  std::vector<Rational> coords_;     // aligned with points_; empty unless sampled
  bool sampled_ = false;
};

inline const Rational FiniteMetricSpace::zero_{};

inline std::vector<MetricViolation> validate_metric(const MetricDraft& draft) {
  std::vector<MetricViolation> out;

  std::vector<std::string> points = draft.points;
  std::sort(points.begin(), points.end());
  for (const std::string& name : points) {
    if (!valid_point_name(name)) {
      throw std::invalid_argument("invalid point name '" + name + "'");
    }
  }
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw std::invalid_argument("duplicate point name");
  }
  const std::size_t n = points.size();
  const auto index_of = [&](const std::string& name) -> std::size_t {
    auto it = std::lower_bound(points.begin(), points.end(), name);
    if (it == points.end() || *it != name) {
      throw UnknownPointError("distance entry names unknown point '" + name + "'");
    }
    return static_cast<std::size_t>(it - points.begin());
  };

  if (n < 3) {
    out.push_back({ViolationKind::TooFewPoints, {}, {}});
  }

  // Last entry wins per directed pair; conflicting directions are reported.
  std::map<std::pair<std::size_t, std::size_t>, Rational> directed;
  for (const DistEntry& e : draft.entries) {
    std::size_t i = index_of(e.a);
    std::size_t j = index_of(e.b);
    if (i == j) {
      if (!e.value.is_zero()) {
        out.push_back({ViolationKind::NonZeroDiagonal, {e.a}, {e.value}});
      }
      continue;
    }
    if (!(e.value > Rational(0))) {
      out.push_back({ViolationKind::NonPositive, {points[std::min(i, j)], points[std::max(i, j)]}, {e.value}});
    }
    directed[{i, j}] = e.value;
  }

  std::map<std::pair<std::size_t, std::size_t>, Rational> table;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto fwd = directed.find({i, j});
      auto rev = directed.find({j, i});
      if (fwd == directed.end() && rev == directed.end()) {
        out.push_back({ViolationKind::MissingPair, {points[i], points[j]}, {}});
        continue;
      }
      if (fwd != directed.end() && rev != directed.end() && !(fwd->second == rev->second)) {
        out.push_back({ViolationKind::Asymmetric,
                       {points[i], points[j]},
                       {fwd->second, rev->second}});
        continue;
      }
      table[{i, j}] = fwd != directed.end() ? fwd->second : rev->second;
    }
  }

  // Triangle checks run only over fully known triples.
  const auto lookup = [&](std::size_t i, std::size_t j) -> const Rational* {
    auto it = table.find({std::min(i, j), std::max(i, j)});
    return it == table.end() ? nullptr : &it->second;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Rational* ij = lookup(i, j);
        const Rational* jk = lookup(j, k);
        const Rational* ik = lookup(i, k);
        if (!ij || !jk || !ik) continue;
        // far side (p,r) against the path through the middle point q
        struct Leg {
          std::size_t p, q, r;
          const Rational *far, *leg1, *leg2;
        };
        const Leg legs[3] = {
            {i, j, k, ik, ij, jk},  // d(i,k) <= d(i,j) + d(j,k)
            {i, k, j, ij, ik, jk},  // d(i,j) <= d(i,k) + d(k,j)
            {j, i, k, jk, ij, ik},  // d(j,k) <= d(j,i) + d(i,k)
        };
        for (const Leg& leg : legs) {
          if (*leg.far > *leg.leg1 + *leg.leg2) {
            out.push_back({ViolationKind::TriangleViolation,
                           {points[leg.p], points[leg.q], points[leg.r]},
                           {*leg.far, *leg.leg1, *leg.leg2}});
          }
        }
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const MetricViolation& a, const MetricViolation& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.witness < b.witness;
  });
  return out;
}

inline FiniteMetricSpace FiniteMetricSpace::from_draft(const MetricDraft& draft) {
  auto violations = validate_metric(draft);
  if (!violations.empty()) {
    throw InvalidMetricError(std::move(violations));
  }

  std::vector<std::string> sorted = draft.points;
  std::sort(sorted.begin(), sorted.end());

  FiniteMetricSpace space;
  space.points_ = std::move(sorted);
  const std::size_t n = space.points_.size();
  space.upper_.assign(n * (n - 1) / 2, Rational(0));
  for (const DistEntry& e : draft.entries) {
    std::size_t i = *space.index_of(e.a);
    std::size_t j = *space.index_of(e.b);
    if (i == j) continue;
    space.upper_[space.pair_index(i, j)] = e.value;
  }
  return space;
}

}  // namespace fixmet
