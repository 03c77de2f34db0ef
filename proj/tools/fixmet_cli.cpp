// fixmet command-line front end.
//
// Subcommands: validate, classify, solve, check-theorem, search. Every
// subcommand supports --json for a machine-readable run report; exit codes
// follow the 0 = positive / 1 = negative finding / 2 = usage-or-parse-error
// discipline throughout.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fixmet/fixmet.hpp"

namespace {

using fixmet::ClassReport;
using fixmet::ContractionClass;
using fixmet::FiniteMetricSpace;
using fixmet::Rational;
using fixmet::SelfMap;
using nlohmann::json;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

// ---------------------------------------------------------------------------
// Input loading (file or built-in generator)

struct GeneratorOptions {
  std::string name;   // "" = none; "step2" supported
  std::string grid;   // "start:stop:step"
  std::string extra;  // comma-separated rationals

  bool active() const { return !name.empty(); }
};

struct LoadedInput {
  fixmet::MetricDraft draft;
  std::shared_ptr<const FiniteMetricSpace> space;  // null when draft invalid
  std::optional<SelfMap> map;
  std::vector<fixmet::MetricViolation> violations;
  std::string bytes;  // digest input: raw file bytes or canonical serialization
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

fixmet::MetricDraft draft_of(const FiniteMetricSpace& space) {
  fixmet::MetricDraft draft;
  draft.points = space.points();
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      draft.entries.push_back({space.point(i), space.point(j), space.dist(i, j)});
    }
  }
  return draft;
}

LoadedInput load_generated(const GeneratorOptions& generator) {
  if (generator.name != "step2") {
    throw CLI::ValidationError("--generator", "unknown generator '" + generator.name + "'");
  }
  if (generator.grid.empty()) {
    throw CLI::ValidationError("--grid", "--generator requires --grid start:stop:step");
  }
  std::vector<std::string> parts = split(generator.grid, ':');
  if (parts.size() != 3) {
    throw CLI::ValidationError("--grid", "expected start:stop:step");
  }
  Rational start, stop, step;
  std::vector<Rational> extras;
  try {
    start = Rational::parse(parts[0]);
    stop = Rational::parse(parts[1]);
    step = Rational::parse(parts[2]);
    if (!generator.extra.empty()) {
      for (const std::string& item : split(generator.extra, ',')) {
        extras.push_back(Rational::parse(item));
      }
    }
  } catch (const std::invalid_argument& err) {
    throw CLI::ValidationError("--grid/--extra", err.what());
  }

  LoadedInput input;
  input.space = std::make_shared<const FiniteMetricSpace>(
      fixmet::line_sample_space(start, stop, step, extras));
  input.draft = draft_of(*input.space);

  // step2 sends x to the sample point 0 when x < 2 and to 1 otherwise; both
  // image points must be present in the sample.
  std::optional<std::size_t> zero_index, one_index;
  for (std::size_t i = 0; i < input.space->size(); ++i) {
    const std::optional<Rational> coord = input.space->coordinate(i);
    if (coord == Rational(0)) zero_index = i;
    if (coord == Rational(1)) one_index = i;
  }
  if (!zero_index || !one_index) {
    throw CLI::ValidationError("--grid", "generator step2 needs the points 0 and 1 in the grid");
  }
  std::vector<std::size_t> images(input.space->size());
  for (std::size_t i = 0; i < input.space->size(); ++i) {
    images[i] = *input.space->coordinate(i) < Rational(2) ? *zero_index : *one_index;
  }
  input.map.emplace(input.space, images);
  input.bytes = fixmet::serialize_instance(*input.space, &*input.map);
  return input;
}

LoadedInput load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw fixmet::ParseError(0, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  LoadedInput input;
  input.bytes = buffer.str();
  fixmet::ParsedFile parsed = fixmet::parse_space_text(input.bytes);
  input.draft = parsed.draft;
  input.violations = fixmet::validate_metric(input.draft);
  if (input.violations.empty()) {
    input.space = std::make_shared<const FiniteMetricSpace>(
        FiniteMetricSpace::from_draft(input.draft));
    if (parsed.has_map) {
      input.map = SelfMap::from_table(input.space, parsed.map_table);
    }
  }
  return input;
}

LoadedInput load_input(const std::string& file, const GeneratorOptions& generator) {
  if (generator.active()) return load_generated(generator);
  if (file.empty()) {
    throw CLI::ValidationError("file", "expected an input file or --generator");
  }
  return load_file(file);
}

// Prints violations (human mode) and returns negative-finding exit code.
int report_invalid_metric(const LoadedInput& input, bool json_mode, std::string_view command) {
  if (json_mode) {
    json results{{"valid", false},
                 {"point_count", input.draft.points.size()},
                 {"violations", fixmet::report::violations_json(input.violations)}};
    std::cout << fixmet::report::dump_report(
        fixmet::report::run_report_json(command, input.bytes, results, kExitNegative));
  } else {
    std::cerr << "invalid metric:\n";
    for (const auto& violation : input.violations) {
      std::cerr << "  " << violation.describe() << "\n";
    }
  }
  return kExitNegative;
}

// ---------------------------------------------------------------------------
// Human renderings

std::string render_tuple(const FiniteMetricSpace& space, const std::vector<std::size_t>& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ",";
    out += space.point(tuple[i]);
  }
  out += ")";
  return out;
}

std::string render_class_line(const FiniteMetricSpace& space, const ClassReport& report) {
  std::string line{fixmet::class_name(report.cls)};
  line += ": lambda*=";
  line += report.lambda_star ? report.lambda_star->str() : "unbounded";
  line += " bound=" + report.bound.str();
  line += std::string(" member=") + (report.member ? "yes" : "no");
  if (report.degenerate) line += " degenerate";
  if (report.sampled) line += " sampled";
  if (report.witness) {
    line += " witness=" + render_tuple(space, report.witness->tuple);
    line += " terms=(" + report.witness->numerator.str() + ", " +
            report.witness->denominator.str() + ")";
  }
  return line;
}

std::string render_orbit_path(const FiniteMetricSpace& space, const fixmet::Orbit& orbit) {
  // For a reached fixed point the stored sequence ends with the repeated
  // fixed point; render the path only up to its first appearance.
  std::size_t count = orbit.sequence.size();
  if (const auto* fixed = std::get_if<fixmet::ReachedFixedPoint>(&orbit.terminus)) {
    count = fixed->steps + 1;
  }
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) out += " -> ";
    out += space.point(orbit.sequence[i]);
  }
  return out;
}

void print_solve_report(const FiniteMetricSpace& space, const fixmet::PicardRun& run) {
  std::cout << "orbit: " << render_orbit_path(space, run.orbit) << "\n";
  if (const auto* fixed = std::get_if<fixmet::ReachedFixedPoint>(&run.orbit.terminus)) {
    std::cout << "fixed point " << space.point(fixed->point) << " reached in " << fixed->steps
              << (fixed->steps == 1 ? " step\n" : " steps\n");
  } else if (const auto* cycle = std::get_if<fixmet::EnteredCycle>(&run.orbit.terminus)) {
    std::cout << "entered a cycle of length " << cycle->cycle.size() << " at index "
              << cycle->entry_index << " (no fixed point on this orbit)\n";
  } else {
    const auto& truncated = std::get<fixmet::Truncated>(run.orbit.terminus);
    std::cout << "truncated after " << truncated.max_steps << " steps\n";
  }

  const fixmet::DecayCertificate& cert = run.certificate;
  std::cout << "lambda = " << cert.lambda.str();
  if (cert.alpha) {
    std::cout << ", alpha = " << cert.alpha->str() << "\n";
  } else {
    std::cout << ", alpha undefined (lambda >= 1/2): certificate asserts nothing\n";
  }
  for (const fixmet::DecayStep& step : cert.steps) {
    std::cout << "d_" << step.index << " = " << step.value.str()
              << (step.applicable ? " (applicable)" : " (not applicable)") << "\n";
  }
  if (cert.alpha) {
    if (cert.violations.empty()) {
      std::cout << "certificate violations: none\n";
    } else {
      std::cout << "certificate violations at indices:";
      for (std::size_t index : cert.violations) std::cout << " " << index;
      std::cout << "\n";
    }
  }
}

void print_verdict(const FiniteMetricSpace& space, const fixmet::TheoremVerdict& verdict) {
  std::cout << "hypothesis (i) no prime period-2 points: "
            << (verdict.hypothesis_no_period_two ? "true" : "false") << "\n";
  std::cout << "hypothesis (ii) generalized Chatterjea member: "
            << (verdict.hypothesis_class_member ? "true" : "false") << "\n";
  std::cout << "fixed points: {";
  for (std::size_t i = 0; i < verdict.fixed_point_set.size(); ++i) {
    if (i > 0) std::cout << ", ";
    std::cout << space.point(verdict.fixed_point_set[i]);
  }
  std::cout << "}\n";
  if (!verdict.hypotheses_hold()) {
    std::cout << "conclusion: not asserted (hypotheses do not hold)\n";
  } else if (verdict.conclusion_holds) {
    std::cout << "conclusion: holds (fixed-point count in {1, 2})\n";
  } else {
    std::cout << "conclusion: FALSIFIED - " << verdict.counterexample.value_or("") << "\n";
  }
}

// ---------------------------------------------------------------------------
// Subcommand bodies

struct CommonOptions {
  std::string file;
  GeneratorOptions generator;
  bool json = false;
};

std::string command_echo(int argc, char** argv) {
  std::string echo;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) echo += " ";
    echo += argv[i];
  }
  return echo;
}

int cmd_validate(const CommonOptions& options, const std::string& echo) {
  LoadedInput input = load_input(options.file, options.generator);
  const bool valid = input.violations.empty();
  if (options.json) {
    json results{{"valid", valid},
                 {"point_count", input.draft.points.size()},
                 {"violations", fixmet::report::violations_json(input.violations)}};
    std::cout << fixmet::report::dump_report(fixmet::report::run_report_json(
        echo, input.bytes, results, valid ? kExitPositive : kExitNegative));
  } else if (valid) {
    std::cout << "ok: valid metric on " << input.draft.points.size() << " points\n";
  } else {
    for (const auto& violation : input.violations) {
      std::cout << violation.describe() << "\n";
    }
  }
  return valid ? kExitPositive : kExitNegative;
}

int cmd_classify(const CommonOptions& options, const std::string& classes,
                 const std::string& echo) {
  std::vector<ContractionClass> selected;
  if (classes == "all") {
    selected.assign(fixmet::kAllClasses.begin(), fixmet::kAllClasses.end());
  } else {
    for (const std::string& name : split(classes, ',')) {
      std::optional<ContractionClass> cls = fixmet::class_from_name(name);
      if (!cls) throw CLI::ValidationError("--classes", "unknown class '" + name + "'");
      selected.push_back(*cls);
    }
  }

  LoadedInput input = load_input(options.file, options.generator);
  if (!input.violations.empty()) return report_invalid_metric(input, options.json, echo);
  if (!input.map) throw CLI::ValidationError("file", "input has no map section");

  std::vector<ClassReport> reports;
  reports.reserve(selected.size());
  for (ContractionClass cls : selected) {
    reports.push_back(fixmet::classify(*input.map, cls));
  }
  const bool all_member =
      std::all_of(reports.begin(), reports.end(), [](const ClassReport& r) { return r.member; });
  const int exit_code = all_member ? kExitPositive : kExitNegative;

  if (options.json) {
    std::cout << fixmet::report::dump_report(fixmet::report::run_report_json(
        echo, input.bytes, fixmet::report::class_reports_json(*input.space, reports), exit_code));
  } else {
    for (const ClassReport& report : reports) {
      std::cout << render_class_line(*input.space, report) << "\n";
    }
  }
  return exit_code;
}

int cmd_solve(const CommonOptions& options, const std::string& start, std::size_t max_steps,
              const std::string& echo) {
  LoadedInput input = load_input(options.file, options.generator);
  if (!input.violations.empty()) return report_invalid_metric(input, options.json, echo);
  if (!input.map) throw CLI::ValidationError("file", "input has no map section");

  fixmet::PicardRun run = fixmet::picard_solve(*input.map, start, max_steps);
  const bool ok = run.orbit.reached_fixed_point() && run.certificate.violations.empty();
  const int exit_code = ok ? kExitPositive : kExitNegative;

  if (options.json) {
    std::cout << fixmet::report::dump_report(fixmet::report::run_report_json(
        echo, input.bytes, fixmet::report::picard_json(*input.space, run), exit_code));
  } else {
    print_solve_report(*input.space, run);
  }
  return exit_code;
}

int cmd_check_theorem(const CommonOptions& options, const std::string& echo) {
  LoadedInput input = load_input(options.file, options.generator);
  if (!input.violations.empty()) return report_invalid_metric(input, options.json, echo);
  if (!input.map) throw CLI::ValidationError("file", "input has no map section");

  fixmet::TheoremVerdict verdict = fixmet::theorem_check(*input.map);
  const int exit_code = verdict.conclusion_holds ? kExitPositive : kExitNegative;

  if (options.json) {
    std::cout << fixmet::report::dump_report(fixmet::report::run_report_json(
        echo, input.bytes, fixmet::report::verdict_json(*input.space, verdict), exit_code));
  } else {
    print_verdict(*input.space, verdict);
  }
  return exit_code;
}

struct SearchOptions {
  std::size_t points = 4;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string require;
  std::string exclude;
  bool no_period_two = false;
  std::string out;
  bool json = false;
};

int cmd_search(const SearchOptions& options, const std::string& echo) {
  fixmet::SeparationPredicate predicate;
  predicate.require_no_period_two = options.no_period_two;
  const auto parse_classes = [](const std::string& list, std::set<ContractionClass>& into) {
    if (list.empty()) return;
    for (const std::string& name : split(list, ',')) {
      std::optional<ContractionClass> cls = fixmet::class_from_name(name);
      if (!cls) throw CLI::ValidationError("--require/--exclude", "unknown class '" + name + "'");
      into.insert(*cls);
    }
  };
  parse_classes(options.require, predicate.require_member);
  parse_classes(options.exclude, predicate.require_nonmember);
  if (predicate.contradictory()) {
    std::cerr << "contradictory predicate: a class is both required and excluded\n";
    return kExitUsage;
  }

  fixmet::SearchResult result =
      fixmet::random_search(options.points, options.trials, options.seed, predicate);
  const int exit_code = result.hit ? kExitPositive : kExitNegative;

  if (result.hit && !options.out.empty()) {
    std::ofstream out(options.out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << options.out << "'\n";
      return kExitUsage;
    }
    out << fixmet::serialize_instance(result.hit->map.space(), &result.hit->map);
  }

  if (options.json) {
    std::cout << fixmet::report::dump_report(fixmet::report::run_report_json(
        echo, echo, fixmet::report::search_json(result), exit_code));
    return exit_code;
  }

  if (!result.hit) {
    std::cout << "no matching instance after " << result.trials_used << " trials (seed "
              << result.seed << ")\n";
    return exit_code;
  }
  std::cout << "found matching instance after " << result.trials_used << " trials (seed "
            << result.seed << ")\n";
  const FiniteMetricSpace& space = result.hit->map.space();
  std::cout << fixmet::serialize_instance(space, &result.hit->map);
  for (const ClassReport& report : result.hit->reports) {
    std::cout << render_class_line(space, report) << "\n";
  }
  print_verdict(space, result.hit->verdict);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixmet: contraction-class classification and fixed-point solving on finite "
               "metric spaces"};
  app.require_subcommand(1);
  const std::string echo = command_echo(argc, argv);

  CommonOptions validate_options, classify_options, solve_options, theorem_options;
  std::string classify_classes = "all";
  std::string solve_start;
  std::size_t solve_max_steps = 1000;
  SearchOptions search_options;

  const auto add_common = [](CLI::App* sub, CommonOptions& options) {
    sub->add_option("file", options.file, "instance file (space + optional map)");
    sub->add_option("--generator", options.generator.name,
                    "built-in instance generator (step2), bypassing the file input");
    sub->add_option("--grid", options.generator.grid, "generator lattice start:stop:step");
    sub->add_option("--extra", options.generator.extra,
                    "extra sample points, comma-separated rationals");
    sub->add_flag("--json", options.json, "emit a machine-readable run report");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the metric axioms of an instance");
  add_common(validate, validate_options);

  CLI::App* classify = app.add_subcommand("classify", "classify the map against the six classes");
  add_common(classify, classify_options);
  classify->add_option("--classes", classify_classes,
                       "comma-separated class list or 'all' (banach, kannan, generalized-kannan, "
                       "chatterjea, generalized-chatterjea, perimeter)");

  CLI::App* solve = app.add_subcommand("solve", "run Picard iteration with a decay certificate");
  add_common(solve, solve_options);
  solve->add_option("--start", solve_start, "starting point")->required();
  solve->add_option("--max-steps", solve_max_steps, "iteration cap");

  CLI::App* theorem = app.add_subcommand("check-theorem",
                                         "check the fixed-point theorem on this instance");
  add_common(theorem, theorem_options);

  CLI::App* search = app.add_subcommand("search", "search for a class-separating instance");
  search->add_option("--points", search_options.points, "points per random space")->required();
  search->add_option("--trials", search_options.trials, "number of random instances to try");
  search->add_option("--seed", search_options.seed, "master RNG seed");
  search->add_option("--require", search_options.require,
                     "classes the instance must belong to (comma-separated)");
  search->add_option("--exclude", search_options.exclude,
                     "classes the instance must not belong to (comma-separated)");
  search->add_flag("--no-period-two", search_options.no_period_two,
                   "additionally require no prime period-2 points");
  search->add_option("--out", search_options.out, "write the found instance to this file");
  search->add_flag("--json", search_options.json, "emit a machine-readable run report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_options, echo);
    if (classify->parsed()) return cmd_classify(classify_options, classify_classes, echo);
    if (solve->parsed()) return cmd_solve(solve_options, solve_start, solve_max_steps, echo);
    if (theorem->parsed()) return cmd_check_theorem(theorem_options, echo);
    if (search->parsed()) return cmd_search(search_options, echo);
  } catch (const CLI::ValidationError& err) {
    std::cerr << err.what() << "\n";
    return kExitUsage;
  } catch (const fixmet::ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const fixmet::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
