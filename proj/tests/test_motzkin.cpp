#include <doctest.h>

#include "dyckstat/motzkin.hpp"

using namespace dyckstat;

TEST_CASE("bicoloured parser enforces the colour-height rules") {
  CHECK(format_motzkin(parse_motzkin("UBD")) == "UBD");
  CHECK(format_motzkin(parse_motzkin("URD")) == "URD");
  CHECK(format_motzkin(parse_motzkin("LL")) == "LL");
  CHECK(parse_motzkin("").length() == 0);

  CHECK_THROWS_WITH_AS(parse_motzkin("ULD"),
                       "position 2: 'L' at height 1, uncoloured level steps only occur at height zero",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_motzkin("BD"), "position 1: coloured level step at height zero",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_motzkin("RD"), "position 1: coloured level step at height zero",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_motzkin("UDD"), "position 3: down step below height zero", ParseError);
  CHECK_THROWS_WITH_AS(parse_motzkin("UU"), "position 3: path ends at height 2, expected zero",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_motzkin("UXD"), "position 2: unexpected character 'X', expected one of 'UDLBR'",
                       ParseError);
}

TEST_CASE("plain paths allow levels anywhere but still check heights") {
  const MotzkinPath p{{PlainStep::Up, PlainStep::Level, PlainStep::Down}};
  CHECK(format_motzkin(p) == "ULD");
  CHECK_FALSE(p.has_level_at_height_zero());

  const MotzkinPath q{{PlainStep::Level, PlainStep::Up, PlainStep::Down}};
  CHECK(q.has_level_at_height_zero());

  CHECK_THROWS_AS(MotzkinPath{{PlainStep::Down}}, ParseError);
  CHECK_THROWS_AS(MotzkinPath{{PlainStep::Up}}, ParseError);
}

TEST_CASE("parse and format are mutually inverse on a few words") {
  for (const char* word : {"", "UD", "LL", "UBD", "URD", "UUBRDD", "LUDUBDL"}) {
    CHECK(format_motzkin(parse_motzkin(word)) == word);
  }
}
