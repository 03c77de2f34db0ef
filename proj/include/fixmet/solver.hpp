#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fixmet/classify.hpp"

namespace fixmet {

/// One entry of the orbit perimeter sequence
/// d_n = d(x_n, x_{n+1}) + d(x_n, x_{n+2}) + d(x_{n+1}, x_{n+2}).
///
/// The geometric decay d_n <= alpha * d_{n-1} is only derived where
/// x_{n-1}, x_n, x_{n+1} are pairwise distinct; `applicable` carries that
/// precondition instead of silently skipping indices.
struct DecayStep {
  std::size_t index = 0;
  Rational value;
  bool applicable = false;

  friend bool operator==(const DecayStep&, const DecayStep&) = default;
};

/// Per-orbit decay certificate with ratio alpha = lambda / (1 - lambda).
/// When lambda >= 1/2 the certificate carries no alpha and asserts nothing.
struct DecayCertificate {
  Rational lambda;
  std::optional<Rational> alpha;        // lambda / (1 - lambda), only for lambda < 1/2
  std::vector<DecayStep> steps;         // d_n for every n with n+2 inside the orbit
  std::vector<std::size_t> violations;  // applicable indices with d_n > alpha * d_{n-1}

  bool applicable() const noexcept { return alpha.has_value(); }
};

struct PicardRun {
  Orbit orbit;
  DecayCertificate certificate;
};

namespace detail {

inline DecayCertificate make_certificate(const FiniteMetricSpace& space,
                                         const std::vector<std::size_t>& seq,
                                         const Rational& lambda) {
  DecayCertificate cert;
  cert.lambda = lambda;
  if (lambda >= Rational(0) && lambda < Rational(1, 2)) {
    cert.alpha = lambda / (Rational(1) - lambda);
  }

  const std::size_t len = seq.size();
  for (std::size_t n = 0; n + 2 < len; ++n) {
    DecayStep step;
    step.index = n;
    step.value = space.dist(seq[n], seq[n + 1]) + space.dist(seq[n], seq[n + 2]) +
                 space.dist(seq[n + 1], seq[n + 2]);
    step.applicable = n >= 1 && seq[n - 1] != seq[n] && seq[n] != seq[n + 1] &&
                      seq[n - 1] != seq[n + 1];
    cert.steps.push_back(step);
  }

  if (cert.alpha) {
    for (std::size_t n = 1; n < cert.steps.size(); ++n) {
      if (!cert.steps[n].applicable) continue;
      if (cert.steps[n].value > *cert.alpha * cert.steps[n - 1].value) {
        cert.violations.push_back(n);
      }
    }
  }
  return cert;
}

}  // namespace detail

/// Picard orbit from start with the decay certificate evaluated for a
/// caller-chosen coefficient, for exploring slack above the optimum.
inline PicardRun picard_solve_with_lambda(const SelfMap& map, std::size_t start,
                                          std::size_t max_steps, const Rational& lambda) {
  Orbit orbit = iterate_orbit(map, start, max_steps);
  DecayCertificate cert = detail::make_certificate(map.space(), orbit.sequence, lambda);
  return PicardRun{std::move(orbit), std::move(cert)};
}

/// Runs the Picard orbit from start and certifies the geometric decay of
/// the d_n sequence using the generalized Chatterjea optimal coefficient.
/// The certificate is meaningful (and must be violation free) exactly when
/// that coefficient is below 1/2.
inline PicardRun picard_solve(const SelfMap& map, std::size_t start, std::size_t max_steps) {
  ClassReport report = classify(map, ContractionClass::GeneralizedChatterjea);
  // The cross-distance sum is positive on every distinct triple, so the
  // generalized Chatterjea report always carries a finite optimum.
  return picard_solve_with_lambda(map, start, max_steps, *report.lambda_star);
}

inline PicardRun picard_solve(const SelfMap& map, std::string_view start,
                              std::size_t max_steps) {
  return picard_solve(map, map.space().require_index(start), max_steps);
}

/// Evaluation of the two-hypothesis fixed point statement on one instance:
/// (i) no points of prime period two, (ii) generalized Chatterjea
/// membership. When both hold the map must have one or two fixed points; a
/// counterexample description is attached if enumeration contradicts that.
struct TheoremVerdict {
  bool hypothesis_no_period_two = false;   // (i)
  bool hypothesis_class_member = false;    // (ii)
  std::vector<std::size_t> fixed_point_set;
  bool conclusion_holds = true;
  std::optional<std::string> counterexample;

  bool hypotheses_hold() const noexcept {
    return hypothesis_no_period_two && hypothesis_class_member;
  }
};

inline TheoremVerdict theorem_check(const SelfMap& map) {
  TheoremVerdict verdict;
  verdict.hypothesis_no_period_two = period_two_points(map).empty();
  verdict.hypothesis_class_member =
      classify(map, ContractionClass::GeneralizedChatterjea).member;
  verdict.fixed_point_set = fixed_points(map);

  if (verdict.hypotheses_hold()) {
    const std::size_t count = verdict.fixed_point_set.size();
    verdict.conclusion_holds = count >= 1 && count <= 2;
    if (!verdict.conclusion_holds) {
      verdict.counterexample = "hypotheses hold but the map has " + std::to_string(count) +
                               " fixed points";
    }
  } else {
    verdict.conclusion_holds = true;  // vacuous
  }
  return verdict;
}

}  // namespace fixmet
