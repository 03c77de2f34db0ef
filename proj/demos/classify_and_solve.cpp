// Demo tour of the fixmet library: build a small instance, classify it
// against all six contraction families, run Picard iteration with the decay
// certificate, check the fixed-point theorem, and search for a separating
// instance.

#include <iostream>
#include <memory>

#include "fixmet/fixmet.hpp"

namespace {

void print_reports(const fixmet::FiniteMetricSpace& space,
                   const std::vector<fixmet::ClassReport>& reports) {
  for (const fixmet::ClassReport& report : reports) {
    std::cout << "  " << fixmet::class_name(report.cls) << ": lambda* = "
              << (report.lambda_star ? report.lambda_star->str() : "unbounded")
              << " (bound " << report.bound.str() << "), "
              << (report.member ? "member" : "not a member");
    if (report.witness) {
      std::cout << ", witness (";
      for (std::size_t i = 0; i < report.witness->tuple.size(); ++i) {
        if (i > 0) std::cout << ", ";
        std::cout << space.point(report.witness->tuple[i]);
      }
      std::cout << ")";
    }
    std::cout << "\n";
  }
}

}  // namespace

int main() {
  // An equilateral triangle {x, y, z} with unit sides; T fixes x and y and
  // folds z onto x. A generalized Chatterjea map with two fixed points.
  fixmet::MetricDraft draft;
  draft.points = {"x", "y", "z"};
  draft.entries = {{"x", "y", 1}, {"y", "z", 1}, {"z", "x", 1}};
  auto space = std::make_shared<const fixmet::FiniteMetricSpace>(
      fixmet::FiniteMetricSpace::from_draft(draft));
  fixmet::SelfMap map = fixmet::SelfMap::from_table(
      space, {{"x", "x"}, {"y", "y"}, {"z", "x"}});

  std::cout << "== classification ==\n";
  print_reports(*space, fixmet::classify_all(map));

  std::cout << "\n== Picard iteration from z ==\n";
  fixmet::PicardRun run = fixmet::picard_solve(map, "z", 100);
  std::cout << "  orbit:";
  for (std::size_t index : run.orbit.sequence) std::cout << " " << space->point(index);
  std::cout << "\n  lambda = " << run.certificate.lambda.str();
  if (run.certificate.alpha) std::cout << ", alpha = " << run.certificate.alpha->str();
  std::cout << "\n  certificate violations: " << run.certificate.violations.size() << "\n";

  std::cout << "\n== theorem check ==\n";
  fixmet::TheoremVerdict verdict = fixmet::theorem_check(map);
  std::cout << "  hypotheses hold: " << (verdict.hypotheses_hold() ? "yes" : "no")
            << ", fixed points: " << verdict.fixed_point_set.size()
            << ", conclusion holds: " << (verdict.conclusion_holds ? "yes" : "no") << "\n";

  std::cout << "\n== random search: generalized Chatterjea but not Chatterjea ==\n";
  fixmet::SeparationPredicate predicate;
  predicate.require_member = {fixmet::ContractionClass::GeneralizedChatterjea};
  predicate.require_nonmember = {fixmet::ContractionClass::Chatterjea};
  fixmet::SearchResult result = fixmet::random_search(3, 20000, 2026, predicate);
  if (result.hit) {
    std::cout << "  found after " << result.trials_used << " trials:\n";
    std::cout << fixmet::serialize_instance(result.hit->map.space(), &result.hit->map);
    print_reports(result.hit->map.space(), result.hit->reports);
  } else {
    std::cout << "  nothing found in " << result.trials_used << " trials\n";
  }
  return 0;
}
