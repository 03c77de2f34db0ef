#pragma once

#include <istream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixmet/self_map.hpp"

namespace fixmet {

/// Result of reading an instance file: the raw space draft (validated
/// separately so violations can be reported) and, when a `map` stanza is
/// present, the send table.
struct ParsedFile {
  MetricDraft draft;
  bool has_map = false;
  std::map<std::string, std::string> map_table;
};

/// Parses the line-oriented instance format:
///
///   space
///   point A
///   dist A B 1
///   ...
///   map
///   send A F
///   ...
///
/// `#` starts a comment; blank lines are ignored. Every unordered pair must
/// appear exactly once under `dist`; every point exactly once as the first
/// argument of a `send`. Any deviation throws ParseError with the line.
inline ParsedFile parse_space_file(std::istream& in) {
  ParsedFile parsed;
  enum class Section { None, Space, Map } section = Section::None;

  std::set<std::string> declared;
  std::set<std::pair<std::string, std::string>> seen_pairs;
  std::string raw;
  std::size_t line_no = 0;

  const auto tokenize = [](const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) {
      if (token.front() == '#') break;
      tokens.push_back(token);
    }
    return tokens;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::vector<std::string> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& head = tokens.front();

    if (head == "space") {
      if (tokens.size() != 1) throw ParseError(line_no, "'space' takes no arguments");
      if (section != Section::None) throw ParseError(line_no, "duplicate 'space' section");
      section = Section::Space;
      continue;
    }
    if (head == "map") {
      if (tokens.size() != 1) throw ParseError(line_no, "'map' takes no arguments");
      if (section != Section::Space) throw ParseError(line_no, "'map' must follow the space section");
      section = Section::Map;
      parsed.has_map = true;
      continue;
    }
    if (head == "point") {
      if (section != Section::Space) throw ParseError(line_no, "'point' outside the space section");
      if (tokens.size() != 2) throw ParseError(line_no, "expected: point <name>");
      const std::string& name = tokens[1];
      if (!valid_point_name(name)) throw ParseError(line_no, "invalid point name '" + name + "'");
      if (!declared.insert(name).second) throw ParseError(line_no, "duplicate point '" + name + "'");
      parsed.draft.points.push_back(name);
      continue;
    }
    if (head == "dist") {
      if (section != Section::Space) throw ParseError(line_no, "'dist' outside the space section");
      if (tokens.size() != 4) throw ParseError(line_no, "expected: dist <a> <b> <value>");
      const std::string& a = tokens[1];
      const std::string& b = tokens[2];
      if (!declared.count(a)) throw ParseError(line_no, "unknown point '" + a + "'");
      if (!declared.count(b)) throw ParseError(line_no, "unknown point '" + b + "'");
      if (a == b) throw ParseError(line_no, "self-distances are implicit; remove 'dist " + a + " " + b + "'");
      auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      if (!seen_pairs.insert(key).second) {
        throw ParseError(line_no, "duplicate distance for pair " + key.first + " " + key.second);
      }
      Rational value;
      try {
        value = Rational::parse(tokens[3]);
      } catch (const std::invalid_argument& err) {
        throw ParseError(line_no, err.what());
      }
      parsed.draft.entries.push_back({a, b, value});
      continue;
    }
    if (head == "send") {
      if (section != Section::Map) throw ParseError(line_no, "'send' outside the map section");
      if (tokens.size() != 3) throw ParseError(line_no, "expected: send <from> <to>");
      const std::string& from = tokens[1];
      const std::string& to = tokens[2];
      if (!declared.count(from)) throw ParseError(line_no, "unknown point '" + from + "'");
      if (!declared.count(to)) throw ParseError(line_no, "unknown point '" + to + "'");
      if (parsed.map_table.count(from)) throw ParseError(line_no, "duplicate send for '" + from + "'");
      parsed.map_table[from] = to;
      continue;
    }
    throw ParseError(line_no, "unknown directive '" + head + "'");
  }

  if (section == Section::None) throw ParseError(line_no, "missing 'space' section");
  if (parsed.has_map) {
    for (const std::string& point : declared) {
      if (!parsed.map_table.count(point)) {
        throw ParseError(line_no, "map is missing a send for '" + point + "'");
      }
    }
  }
  return parsed;
}

inline ParsedFile parse_space_text(const std::string& text) {
  std::istringstream stream(text);
  return parse_space_file(stream);
}

/// Instance ready for use: the validated space and the optional map.
struct Instance {
  std::shared_ptr<const FiniteMetricSpace> space;
  std::optional<SelfMap> map;
};

/// Builds the space (throwing InvalidMetricError on axiom failures) and the
/// map from a parsed file.
inline Instance build_instance(const ParsedFile& parsed) {
  Instance instance;
  instance.space =
      std::make_shared<const FiniteMetricSpace>(FiniteMetricSpace::from_draft(parsed.draft));
  if (parsed.has_map) {
    instance.map = SelfMap::from_table(instance.space, parsed.map_table);
  }
  return instance;
}

/// Canonical text form: points sorted, one line per unordered pair in
/// lexicographic order, canonical rational literals. Re-parsing reproduces
/// the space and map exactly, and equal instances serialize byte-identically.
inline std::string serialize_instance(const FiniteMetricSpace& space, const SelfMap* map) {
  std::string out = "space\n";
  for (const std::string& name : space.points()) {
    out += "point " + name + "\n";
  }
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out += "dist " + space.point(i) + " " + space.point(j) + " " + space.dist(i, j).str() + "\n";
    }
  }
  if (map != nullptr) {
    out += "map\n";
    for (std::size_t i = 0; i < n; ++i) {
      out += "send " + space.point(i) + " " + space.point(map->apply(i)) + "\n";
    }
  }
  return out;
}

}  // namespace fixmet
