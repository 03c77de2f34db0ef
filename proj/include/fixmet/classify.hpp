#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fixmet/self_map.hpp"

namespace fixmet {

/// The six contraction classes handled by the classifier. Pair classes
/// constrain d(Tx,Ty) against a pair expression; triple classes constrain
/// the image-triangle perimeter against a triple expression.
enum class ContractionClass {
  Banach,
  Kannan,
  GeneralizedKannan,
  Chatterjea,
  GeneralizedChatterjea,
  PerimeterContracting,
};

inline constexpr std::array<ContractionClass, 6> kAllClasses = {
    ContractionClass::Banach,
    ContractionClass::Kannan,
    ContractionClass::GeneralizedKannan,
    ContractionClass::Chatterjea,
    ContractionClass::GeneralizedChatterjea,
    ContractionClass::PerimeterContracting,
};

enum class ClassArity { Pair, Triple };

inline ClassArity class_arity(ContractionClass cls) {
  switch (cls) {
    case ContractionClass::Banach:
    case ContractionClass::Kannan:
    case ContractionClass::Chatterjea:
      return ClassArity::Pair;
    default:
      return ClassArity::Triple;
  }
}

/// Coefficient range is [0, bound); membership needs the optimal
/// coefficient strictly below this bound.
inline Rational class_bound(ContractionClass cls) {
  switch (cls) {
    case ContractionClass::Banach: return Rational(1);
    case ContractionClass::Kannan: return Rational(1, 2);
    case ContractionClass::GeneralizedKannan: return Rational(2, 3);
    case ContractionClass::Chatterjea: return Rational(1, 2);
    case ContractionClass::GeneralizedChatterjea: return Rational(1, 2);
    case ContractionClass::PerimeterContracting: return Rational(1);
  }
  return Rational(1);
}

inline std::string_view class_name(ContractionClass cls) {
  switch (cls) {
    case ContractionClass::Banach: return "banach";
    case ContractionClass::Kannan: return "kannan";
    case ContractionClass::GeneralizedKannan: return "generalized-kannan";
    case ContractionClass::Chatterjea: return "chatterjea";
    case ContractionClass::GeneralizedChatterjea: return "generalized-chatterjea";
    case ContractionClass::PerimeterContracting: return "perimeter";
  }
  return "unknown";
}

inline std::optional<ContractionClass> class_from_name(std::string_view name) {
  for (ContractionClass cls : kAllClasses) {
    if (class_name(cls) == name) return cls;
  }
  return std::nullopt;
}

/// The two triple quantities of the three-point conditions: the perimeter
/// of the image triangle, and the sum of the six distances from each point
/// to the images of the other two. Both are permutation invariant.
struct TripleScores {
  std::array<std::size_t, 3> triple;  // ascending indices
  Rational image_perimeter;           // d(Tx,Ty) + d(Ty,Tz) + d(Tz,Tx)
  Rational cross_sum;                 // d(x,Ty)+d(y,Tx)+d(y,Tz)+d(z,Tx)+d(z,Ty)+d(x,Tz)
};

inline TripleScores triple_scores(const SelfMap& map, std::size_t x, std::size_t y,
                                  std::size_t z) {
  if (x == y || y == z || x == z) {
    throw NotDistinctError("triple points must be pairwise distinct");
  }
  const FiniteMetricSpace& s = map.space();
  std::size_t tx = map.apply(x), ty = map.apply(y), tz = map.apply(z);

  TripleScores scores;
  scores.triple = {x, y, z};
  std::sort(scores.triple.begin(), scores.triple.end());
  scores.image_perimeter = s.dist(tx, ty) + s.dist(ty, tz) + s.dist(tz, tx);
  scores.cross_sum = s.dist(x, ty) + s.dist(y, tx) + s.dist(y, tz) + s.dist(z, tx) +
                     s.dist(z, ty) + s.dist(x, tz);
  return scores;
}

inline TripleScores triple_scores(const SelfMap& map, std::string_view x, std::string_view y,
                                  std::string_view z) {
  const FiniteMetricSpace& s = map.space();
  return triple_scores(map, s.require_index(x), s.require_index(y), s.require_index(z));
}

/// Numerator and denominator of the class-defining ratio at one tuple.
struct RatioTerms {
  Rational numerator;
  Rational denominator;

  friend bool operator==(const RatioTerms&, const RatioTerms&) = default;
};

inline RatioTerms class_ratio_terms(const SelfMap& map, ContractionClass cls,
                                    std::span<const std::size_t> tuple) {
  const FiniteMetricSpace& s = map.space();
  const std::size_t want = class_arity(cls) == ClassArity::Pair ? 2 : 3;
  if (tuple.size() != want) {
    throw ArityMismatchError("class expects a tuple of " + std::to_string(want) + " points");
  }

  if (want == 2) {
    std::size_t x = tuple[0], y = tuple[1];
    if (x == y) throw NotDistinctError("pair points must be distinct");
    std::size_t tx = map.apply(x), ty = map.apply(y);
    switch (cls) {
      case ContractionClass::Banach:
        return {s.dist(tx, ty), s.dist(x, y)};
      case ContractionClass::Kannan:
        return {s.dist(tx, ty), s.dist(x, tx) + s.dist(y, ty)};
      case ContractionClass::Chatterjea:
        return {s.dist(tx, ty), s.dist(x, ty) + s.dist(y, tx)};
      default:
        break;
    }
  }

  std::size_t x = tuple[0], y = tuple[1], z = tuple[2];
  TripleScores scores = triple_scores(map, x, y, z);
  switch (cls) {
    case ContractionClass::GeneralizedKannan:
      return {scores.image_perimeter,
              s.dist(x, map.apply(x)) + s.dist(y, map.apply(y)) + s.dist(z, map.apply(z))};
    case ContractionClass::GeneralizedChatterjea:
      return {scores.image_perimeter, scores.cross_sum};
    case ContractionClass::PerimeterContracting:
      return {scores.image_perimeter, s.dist(x, y) + s.dist(y, z) + s.dist(z, x)};
    default:
      break;
  }
  throw ArityMismatchError("unhandled contraction class");
}

/// Extremal tuple of a class report together with its raw ratio terms.
struct Witness {
  std::vector<std::size_t> tuple;
  Rational numerator;
  Rational denominator;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Classification result for one contraction class.
///
/// lambda_star is the attained maximum of the defining ratio over all
/// admissible tuples, or empty when some tuple has a zero denominator with a
/// positive numerator (degenerate: the supremum is unbounded). Membership
/// requires a finite optimum strictly below the class bound. On sampled
/// spaces the optimum is only a certified lower bound for the underlying
/// infinite space.
struct ClassReport {
  ContractionClass cls = ContractionClass::Banach;
  Rational bound;
  std::optional<Rational> lambda_star;  // empty = unbounded
  bool member = false;
  bool degenerate = false;
  bool sampled = false;
  std::optional<Witness> witness;

  friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

/// Enumerates every admissible unordered tuple, maximizing the defining
/// ratio. Tuples with numerator = denominator = 0 are vacuous and skipped;
/// ties on the ratio keep the lexicographically smallest tuple.
inline ClassReport classify(const SelfMap& map, ContractionClass cls) {
  const FiniteMetricSpace& s = map.space();
  const std::size_t n = s.size();
  const std::size_t arity = class_arity(cls) == ClassArity::Pair ? 2 : 3;
  if (n < arity) throw TooFewPointsError("space too small for this class");

  ClassReport report;
  report.cls = cls;
  report.bound = class_bound(cls);
  report.sampled = s.sampled();

  std::optional<Rational> best;
  const auto consider = [&](std::span<const std::size_t> tuple) {
    RatioTerms terms = class_ratio_terms(map, cls, tuple);
    if (terms.denominator.is_zero()) {
      if (terms.numerator.is_zero()) return;  // vacuous: 0 <= lambda * 0
      if (!report.degenerate) {
        report.degenerate = true;
        report.witness = Witness{{tuple.begin(), tuple.end()}, terms.numerator, terms.denominator};
      }
      return;
    }
    if (report.degenerate) return;  // witness already pinned to the first degenerate tuple
    Rational ratio = terms.numerator / terms.denominator;
    if (!best || ratio > *best) {
      best = ratio;
      report.witness = Witness{{tuple.begin(), tuple.end()}, terms.numerator, terms.denominator};
    }
  };

  if (arity == 2) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t tuple[] = {i, j};
        consider(tuple);
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          const std::size_t tuple[] = {i, j, k};
          consider(tuple);
        }
      }
    }
  }

  if (report.degenerate) {
    report.lambda_star = std::nullopt;
    report.member = false;
  } else {
    report.lambda_star = best ? *best : Rational(0);
    report.member = *report.lambda_star < report.bound;
  }
  return report;
}

/// One report per class, in the fixed declaration order.
inline std::vector<ClassReport> classify_all(const SelfMap& map) {
  std::vector<ClassReport> reports;
  reports.reserve(kAllClasses.size());
  for (ContractionClass cls : kAllClasses) {
    reports.push_back(classify(map, cls));
  }
  return reports;
}

}  // namespace fixmet
