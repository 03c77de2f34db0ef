#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "fixmet/generators.hpp"
#include "fixmet/io.hpp"

using fixmet::FiniteMetricSpace;
using fixmet::Instance;
using fixmet::ParsedFile;
using fixmet::ParseError;
using fixmet::Rational;
using fixmet::SelfMap;

namespace {

std::size_t line_of(const std::string& text) {
  try {
    fixmet::parse_space_text(text);
  } catch (const ParseError& err) {
    return err.line();
  }
  return 0;  // no error thrown
}

const char* kFold =
    "space\n"
    "point x\n"
    "point y\n"
    "point z\n"
    "dist x y 1\n"
    "dist x z 1\n"
    "dist y z 1\n"
    "map\n"
    "send x x\n"
    "send y y\n"
    "send z x\n";

}  // namespace

TEST_CASE("parsing a complete instance", "[io]") {
  ParsedFile parsed = fixmet::parse_space_text(kFold);
  CHECK(parsed.draft.points == std::vector<std::string>{"x", "y", "z"});
  REQUIRE(parsed.draft.entries.size() == 3);
  CHECK(parsed.draft.entries[0].a == "x");
  CHECK(parsed.draft.entries[0].b == "y");
  CHECK(parsed.draft.entries[0].value == Rational(1));
  REQUIRE(parsed.has_map);
  CHECK(parsed.map_table == std::map<std::string, std::string>{
                                {"x", "x"}, {"y", "y"}, {"z", "x"}});

  Instance instance = fixmet::build_instance(parsed);
  REQUIRE(instance.space != nullptr);
  CHECK(instance.space->size() == 3);
  REQUIRE(instance.map.has_value());
  CHECK(instance.map->apply(2) == 0);
}

TEST_CASE("a space-only file builds an instance without a map", "[io]") {
  ParsedFile parsed = fixmet::parse_space_text(
      "space\n"
      "point a\npoint b\npoint c\n"
      "dist a b 2\ndist b c 2\ndist a c 2\n");
  CHECK_FALSE(parsed.has_map);
  Instance instance = fixmet::build_instance(parsed);
  CHECK_FALSE(instance.map.has_value());
  CHECK(instance.space->dist(0, 1) == Rational(2));
}

TEST_CASE("comments, blank lines, and spacing are tolerated", "[io]") {
  ParsedFile parsed = fixmet::parse_space_text(
      "# instance header\n"
      "\n"
      "space\n"
      "point a   # first point\n"
      "point b\n"
      "point c\n"
      "   dist a b 1/2\n"
      "dist b c 3/2   # widest pair\n"
      "dist a c 2\n"
      "\n");
  CHECK(parsed.draft.points.size() == 3);
  CHECK(parsed.draft.entries[0].value == Rational(1, 2));
  CHECK(parsed.draft.entries[1].value == Rational(3, 2));
}

TEST_CASE("decimal literals parse to exact rationals", "[io]") {
  ParsedFile parsed = fixmet::parse_space_text(
      "space\npoint a\npoint b\npoint c\n"
      "dist a b 0.5\ndist b c 2.1\ndist a c 1.9\n");
  CHECK(parsed.draft.entries[0].value == Rational(1, 2));
  CHECK(parsed.draft.entries[1].value == Rational(21, 10));
  CHECK(parsed.draft.entries[2].value == Rational(19, 10));
}

TEST_CASE("parse errors carry the offending line number", "[io]") {
  SECTION("unknown directive") {
    CHECK(line_of("space\npoint a\nfrobnicate a b\n") == 3);
  }
  SECTION("point before the space header") {
    CHECK(line_of("point a\n") == 1);
  }
  SECTION("dist before the space header") {
    CHECK(line_of("dist a b 1\n") == 1);
  }
  SECTION("duplicate space header") {
    CHECK(line_of("space\nspace\n") == 2);
  }
  SECTION("bad point name") {
    CHECK(line_of("space\npoint bad name!\n") == 2);  // tokenizes as 3 tokens
    CHECK(line_of("space\npoint \xC3\xA9\n") == 2);
  }
  SECTION("duplicate point") {
    CHECK(line_of("space\npoint a\npoint a\n") == 3);
  }
  SECTION("dist references an undeclared point") {
    CHECK(line_of("space\npoint a\npoint b\ndist a q 1\n") == 4);
  }
  SECTION("self distance is rejected") {
    CHECK(line_of("space\npoint a\npoint b\ndist a a 1\n") == 4);
  }
  SECTION("duplicate unordered pair, regardless of order") {
    CHECK(line_of("space\npoint a\npoint b\npoint c\n"
                  "dist a b 1\ndist b a 1\n") == 6);
  }
  SECTION("malformed rational") {
    CHECK(line_of("space\npoint a\npoint b\ndist a b 1//2\n") == 4);
    CHECK(line_of("space\npoint a\npoint b\ndist a b .5\n") == 4);
    CHECK(line_of("space\npoint a\npoint b\ndist a b 1/0\n") == 4);
  }
  SECTION("wrong arity") {
    CHECK(line_of("space\npoint\n") == 2);
    CHECK(line_of("space\npoint a\npoint b\ndist a b\n") == 4);
    CHECK(line_of("space extra\n") == 1);
  }
  SECTION("map before space") {
    CHECK(line_of("map\n") == 1);
  }
  SECTION("send outside a map section") {
    CHECK(line_of("space\npoint a\nsend a a\n") == 3);
  }
  SECTION("send with an unknown point") {
    CHECK(line_of("space\npoint a\npoint b\npoint c\n"
                  "dist a b 1\ndist b c 1\ndist a c 1\n"
                  "map\nsend a q\n") == 9);
  }
  SECTION("duplicate send") {
    CHECK(line_of("space\npoint a\npoint b\npoint c\n"
                  "dist a b 1\ndist b c 1\ndist a c 1\n"
                  "map\nsend a a\nsend a b\n") == 10);
  }
  SECTION("empty input") {
    CHECK_THROWS_AS(fixmet::parse_space_text(""), ParseError);
  }
  SECTION("map missing a send reports at end of input") {
    const char* text =
        "space\npoint a\npoint b\npoint c\n"
        "dist a b 1\ndist b c 1\ndist a c 1\n"
        "map\nsend a a\n";
    try {
      fixmet::parse_space_text(text);
      FAIL("expected ParseError");
    } catch (const ParseError& err) {
      CHECK(std::string(err.what()).find("missing a send for 'b'") != std::string::npos);
    }
  }
  SECTION("what() prefixes the line number") {
    try {
      fixmet::parse_space_text("space\nnonsense\n");
      FAIL("expected ParseError");
    } catch (const ParseError& err) {
      CHECK(std::string(err.what()) == "line 2: unknown directive 'nonsense'");
    }
  }
}

TEST_CASE("parsing succeeds on drafts that fail metric validation", "[io]") {
  // Parsing is syntax only; axioms are the validator's job.
  ParsedFile parsed = fixmet::parse_space_text(
      "space\npoint a\npoint b\npoint c\n"
      "dist a b 10\ndist b c 1\ndist a c 1\n");
  CHECK(parsed.draft.entries.size() == 3);
  CHECK_THROWS_AS(fixmet::build_instance(parsed), fixmet::InvalidMetricError);
  CHECK_FALSE(fixmet::validate_metric(parsed.draft).empty());
}

TEST_CASE("serialization is canonical and round-trips", "[io]") {
  SECTION("the worked instance") {
    Instance instance = fixmet::build_instance(fixmet::parse_space_text(kFold));
    std::string text = fixmet::serialize_instance(*instance.space, &*instance.map);
    CHECK(text == kFold);  // kFold is already in canonical order

    Instance again = fixmet::build_instance(fixmet::parse_space_text(text));
    CHECK(*again.space == *instance.space);
    CHECK(again.map->images() == instance.map->images());
  }

  SECTION("permuted input serializes identically") {
    const char* shuffled =
        "space\n"
        "point z\n"
        "point x\n"
        "point y\n"
        "dist x z 1\n"
        "dist y x 1\n"
        "dist z y 1\n"
        "map\n"
        "send z x\n"
        "send y y\n"
        "send x x\n";
    Instance a = fixmet::build_instance(fixmet::parse_space_text(kFold));
    Instance b = fixmet::build_instance(fixmet::parse_space_text(shuffled));
    CHECK(fixmet::serialize_instance(*a.space, &*a.map) ==
          fixmet::serialize_instance(*b.space, &*b.map));
  }

  SECTION("space-only serialization omits the map stanza") {
    Instance instance = fixmet::build_instance(fixmet::parse_space_text(kFold));
    std::string text = fixmet::serialize_instance(*instance.space, nullptr);
    CHECK(text.find("map") == std::string::npos);
    ParsedFile reparsed = fixmet::parse_space_text(text);
    CHECK_FALSE(reparsed.has_map);
  }

  SECTION("random instances round-trip exactly") {
    std::mt19937_64 rng(31415);
    for (int round = 0; round < 25; ++round) {
      const std::size_t n = 3 + rng() % 4;
      auto space = std::make_shared<const FiniteMetricSpace>(
          fixmet::random_metric_space(n, rng(), Rational(1, 2), Rational(5, 2)));
      std::vector<std::size_t> images(n);
      for (auto& img : images) img = rng() % n;
      SelfMap map(space, images);

      std::string text = fixmet::serialize_instance(*space, &map);
      Instance rebuilt = fixmet::build_instance(fixmet::parse_space_text(text));
      CHECK(*rebuilt.space == *space);
      CHECK(rebuilt.map->images() == images);
      CHECK(fixmet::serialize_instance(*rebuilt.space, &*rebuilt.map) == text);
    }
  }
}

TEST_CASE("parse_space_file reads from any stream", "[io]") {
  const char* path = "io_roundtrip_tmp.space";
  {
    std::ofstream out(path);
    out << kFold;
  }
  std::ifstream in(path);
  REQUIRE(in.good());
  ParsedFile parsed = fixmet::parse_space_file(in);
  CHECK(parsed.draft.points.size() == 3);
  CHECK(parsed.has_map);
  std::remove(path);
}
