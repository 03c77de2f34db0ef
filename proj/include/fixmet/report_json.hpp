#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fixmet/classify.hpp"
#include "fixmet/io.hpp"
#include "fixmet/search.hpp"
#include "fixmet/solver.hpp"

namespace fixmet::report {

using nlohmann::json;

/// FNV-1a 64-bit hash of the raw input bytes; used as the input digest in
/// machine reports so reruns on identical input are trivially comparable.
inline std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  return hash;
}

inline std::string hex_digest(std::string_view bytes) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::uint64_t hash = fnv1a64(bytes);
  std::string out(16, '0');
  for (std::size_t i = 16; i-- > 0; hash >>= 4) {
    out[i] = kHex[hash & 0xF];
  }
  return out;
}

inline json rational_json(const Rational& value) { return value.str(); }

inline json lambda_star_json(const std::optional<Rational>& lambda_star) {
  if (!lambda_star) return "unbounded";
  return lambda_star->str();
}

inline json tuple_json(const FiniteMetricSpace& space, std::span<const std::size_t> tuple) {
  json out = json::array();
  for (std::size_t index : tuple) out.push_back(space.point(index));
  return out;
}

inline json witness_json(const FiniteMetricSpace& space, const std::optional<Witness>& witness) {
  if (!witness) return nullptr;
  return json{{"tuple", tuple_json(space, witness->tuple)},
              {"numerator", rational_json(witness->numerator)},
              {"denominator", rational_json(witness->denominator)}};
}

inline json class_report_json(const FiniteMetricSpace& space, const ClassReport& report) {
  return json{{"class", std::string(class_name(report.cls))},
              {"lambda_star", lambda_star_json(report.lambda_star)},
              {"bound", rational_json(report.bound)},
              {"member", report.member},
              {"witness", witness_json(space, report.witness)},
              {"degenerate", report.degenerate},
              {"sampled", report.sampled}};
}

inline json class_reports_json(const FiniteMetricSpace& space,
                               std::span<const ClassReport> reports) {
  json out = json::array();
  for (const ClassReport& report : reports) out.push_back(class_report_json(space, report));
  return out;
}

inline json violations_json(const std::vector<MetricViolation>& violations) {
  json out = json::array();
  for (const MetricViolation& violation : violations) {
    json values = json::array();
    for (const Rational& value : violation.values) values.push_back(rational_json(value));
    out.push_back(json{{"kind", to_string(violation.kind)},
                       {"witness", violation.witness},
                       {"values", values}});
  }
  return out;
}

inline json terminus_json(const FiniteMetricSpace& space, const OrbitTerminus& terminus) {
  if (const auto* fixed = std::get_if<ReachedFixedPoint>(&terminus)) {
    return json{{"kind", "fixed-point"},
                {"point", space.point(fixed->point)},
                {"steps", fixed->steps}};
  }
  if (const auto* cycle = std::get_if<EnteredCycle>(&terminus)) {
    json points = json::array();
    for (std::size_t index : cycle->cycle) points.push_back(space.point(index));
    return json{{"kind", "cycle"}, {"cycle", points}, {"entry_index", cycle->entry_index}};
  }
  const auto& truncated = std::get<Truncated>(terminus);
  return json{{"kind", "truncated"}, {"max_steps", truncated.max_steps}};
}

inline json orbit_json(const FiniteMetricSpace& space, const Orbit& orbit) {
  return json{{"start", space.point(orbit.start)},
              {"sequence", tuple_json(space, orbit.sequence)},
              {"terminus", terminus_json(space, orbit.terminus)}};
}

inline json certificate_json(const DecayCertificate& certificate) {
  json steps = json::array();
  for (const DecayStep& step : certificate.steps) {
    steps.push_back(json{{"index", step.index},
                         {"value", rational_json(step.value)},
                         {"applicable", step.applicable}});
  }
  return json{{"lambda", rational_json(certificate.lambda)},
              {"alpha", certificate.alpha ? json(certificate.alpha->str()) : json(nullptr)},
              {"steps", steps},
              {"violations", certificate.violations}};
}

inline json picard_json(const FiniteMetricSpace& space, const PicardRun& run) {
  return json{{"orbit", orbit_json(space, run.orbit)},
              {"certificate", certificate_json(run.certificate)}};
}

inline json verdict_json(const FiniteMetricSpace& space, const TheoremVerdict& verdict) {
  return json{{"hypothesis_no_period_two", verdict.hypothesis_no_period_two},
              {"hypothesis_class_member", verdict.hypothesis_class_member},
              {"fixed_point_set", tuple_json(space, verdict.fixed_point_set)},
              {"conclusion_holds", verdict.conclusion_holds},
              {"counterexample",
               verdict.counterexample ? json(*verdict.counterexample) : json(nullptr)}};
}

inline json search_json(const SearchResult& result) {
  json out{{"found", result.hit.has_value()},
           {"trials_used", result.trials_used},
           {"seed", result.seed}};
  if (result.hit) {
    const FiniteMetricSpace& space = result.hit->map.space();
    out["instance"] = serialize_instance(space, &result.hit->map);
    out["reports"] = class_reports_json(space, result.hit->reports);
    out["verdict"] = verdict_json(space, result.hit->verdict);
  } else {
    out["instance"] = nullptr;
  }
  return out;
}

/// Top-level machine report: command echo, digest of the consumed input, the
/// command-specific results object, and the process exit code.
inline json run_report_json(std::string_view command, std::string_view input_bytes, json results,
                            int exit_code) {
  return json{{"command", std::string(command)},
              {"input_digest", hex_digest(input_bytes)},
              {"results", std::move(results)},
              {"exit_code", exit_code}};
}

/// Canonical dump: nlohmann's default object representation keeps keys
/// sorted, so equal reports serialize to identical bytes.
inline std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace fixmet::report
