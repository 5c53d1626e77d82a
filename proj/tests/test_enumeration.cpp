#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "dyckstat/bijections.hpp"
#include "dyckstat/enumeration.hpp"
#include "oracles.hpp"

using namespace dyckstat;

namespace {

std::vector<std::string> collect_dyck(int n) {
  std::vector<std::string> out;
  DyckPathStream stream(n);
  while (auto p = stream.next()) out.push_back(format_dyck(*p));
  return out;
}

}  // namespace

TEST_CASE("counting sequences, frozen values") {
  const std::vector<std::int64_t> kCatalan = {1,    1,    2,     5,     14,    42,    132,
                                              429,  1430, 4862,  16796, 58786, 208012};
  const std::vector<std::int64_t> kMotzkin = {1,   1,   2,    4,    9,    21,   51,
                                              127, 323, 835,  2188, 5798, 15511};
  const std::vector<std::int64_t> kRiordan = {1,  0,  1,   1,   3,    6,    15,
                                              36, 91, 232, 603, 1585, 4213};
  for (int n = 0; n <= 12; ++n) {
    CHECK(catalan(n) == kCatalan[static_cast<std::size_t>(n)]);
    CHECK(motzkin_number(n) == kMotzkin[static_cast<std::size_t>(n)]);
    CHECK(riordan_number(n) == kRiordan[static_cast<std::size_t>(n)]);
  }
  CHECK(catalan(14) == 2674440);
}

TEST_CASE("catalan agrees with the product-formula oracle up to n = 35") {
  for (int n = 0; n <= 35; ++n) CHECK(catalan(n) == oracles::catalan_by_product(n));
}

TEST_CASE("motzkin splits into adjacent riordan numbers up to n = 30") {
  for (int n = 0; n <= 30; ++n)
    CHECK(motzkin_number(n) == riordan_number(n) + riordan_number(n + 1));
}

TEST_CASE("counting functions fail loudly beyond the 64-bit range") {
  CHECK(catalan(35) == 3116285494907301262LL);
  CHECK_THROWS_AS(catalan(36), std::overflow_error);
  CHECK(motzkin_number(44) == 4684478925507420069LL);
  CHECK_THROWS_AS(motzkin_number(45), std::overflow_error);
  CHECK(riordan_number(45) == 3484084625456932134LL);
  CHECK_THROWS_AS(riordan_number(46), std::overflow_error);
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("dyck stream: order, first and last words, frozen n = 3 list") {
  CHECK(collect_dyck(0) == std::vector<std::string>{""});
  CHECK(collect_dyck(1) == std::vector<std::string>{"NE"});
  CHECK(collect_dyck(3) ==
        std::vector<std::string>{"NNNEEE", "NNENEE", "NNEENE", "NENNEE", "NENENE"});

  for (int n = 0; n <= 9; ++n) {
    DyckPathStream stream(n);
    std::optional<DyckPath> previous;
    std::int64_t count = 0;
    while (auto p = stream.next()) {
      if (previous) CHECK(*previous < *p);  // strictly increasing, hence duplicate-free
      previous = std::move(p);
      ++count;
    }
    CHECK(count == catalan(n));
  }
  // spot-check the larger sizes the harness sweeps
  std::int64_t count12 = 0;
  DyckPathStream stream12(12);
  while (stream12.next()) ++count12;
  CHECK(count12 == catalan(12));
}

TEST_CASE("dyck stream equals the filtered word list up to n = 6") {
  for (int n = 0; n <= 6; ++n) {
    auto expected = oracles::filter_all_words("NE", 2 * n, [](const std::string& w) {
      return parse_dyck(w);
    });
    auto actual = collect_dyck(n);
    std::sort(actual.begin(), actual.end());
    CHECK(actual == expected);
  }
}

TEST_CASE("rank and unrank") {
  for (int n : {0, 1, 4, 7}) {
    DyckPathStream stream(n);
    std::int64_t rank = 0;
    while (auto p = stream.next()) {
      CHECK(dyck_rank(*p) == rank);
      CHECK(dyck_unrank(n, rank) == *p);
      ++rank;
    }
  }
  CHECK_THROWS_AS(dyck_unrank(3, 5), std::out_of_range);
  CHECK_THROWS_AS(dyck_unrank(3, -1), std::out_of_range);
}

TEST_CASE("rank-range streams partition the full stream") {
  const int n = 7;
  const std::int64_t total = catalan(n);
  for (std::int64_t split : {std::int64_t{0}, std::int64_t{1}, total / 3, total - 1, total}) {
    std::vector<std::string> joined;
    DyckPathStream left(n, 0, split);
    while (auto p = left.next()) joined.push_back(format_dyck(*p));
    DyckPathStream right(n, split, total);
    while (auto p = right.next()) joined.push_back(format_dyck(*p));
    CHECK(joined == collect_dyck(n));
  }
  CHECK_THROWS_AS(DyckPathStream(3, 0, 6), std::out_of_range);
}

TEST_CASE("motzkin family streams: frozen small cases") {
  const auto collect_plain = [](auto stream) {
    std::vector<std::string> out;
    while (auto p = stream.next()) out.push_back(format_motzkin(*p));
    return out;
  };
  CHECK(collect_plain(MotzkinStream(0)) == std::vector<std::string>{""});
  CHECK(collect_plain(MotzkinStream(3)) ==
        std::vector<std::string>{"UDL", "ULD", "LUD", "LLL"});
  CHECK(collect_plain(RiordanStream(3)) == std::vector<std::string>{"ULD"});
  CHECK(collect_plain(RiordanStream(1)).empty());
  CHECK(collect_plain(BicolouredMotzkinStream(2)) == std::vector<std::string>{"UD", "LL"});
}

TEST_CASE("motzkin family streams: counts, order, and validity") {
  for (int n = 0; n <= 9; ++n) {
    std::int64_t motzkin = 0;
    {
      MotzkinStream stream(n);
      std::optional<MotzkinPath> prev;
      while (auto p = stream.next()) {
        if (prev) CHECK(*prev < *p);
        prev = std::move(p);
        ++motzkin;
      }
    }
    CHECK(motzkin == motzkin_number(n));

    std::int64_t riordan = 0;
    {
      RiordanStream stream(n);
      std::optional<MotzkinPath> prev;
      while (auto p = stream.next()) {
        CHECK_FALSE(p->has_level_at_height_zero());
        if (prev) CHECK(*prev < *p);
        prev = std::move(p);
        ++riordan;
      }
    }
    CHECK(riordan == riordan_number(n));

    std::int64_t bicoloured = 0;
    {
      BicolouredMotzkinStream stream(n);
      std::optional<BicolouredMotzkinPath> prev;
      while (auto p = stream.next()) {
        if (prev) CHECK(*prev < *p);
        prev = std::move(p);
        ++bicoloured;
      }
    }
    CHECK(bicoloured == catalan(n));
  }
}

TEST_CASE("plain streams equal the filtered word lists up to n = 7") {
  for (int n = 0; n <= 7; ++n) {
    auto expected_motzkin = oracles::filter_all_words("UDL", n, [](const std::string& w) {
      std::vector<PlainStep> steps;
      for (char c : w)
        steps.push_back(c == 'U' ? PlainStep::Up : c == 'D' ? PlainStep::Down : PlainStep::Level);
      return MotzkinPath(std::move(steps));
    });
    std::vector<std::string> actual;
    MotzkinStream stream(n);
    while (auto p = stream.next()) actual.push_back(format_motzkin(*p));
    std::sort(actual.begin(), actual.end());
    CHECK(actual == expected_motzkin);

    auto expected_bicoloured = oracles::filter_all_words("UDLBR", n <= 5 ? n : 0,
                                                         [](const std::string& w) {
                                                           return parse_motzkin(w);
                                                         });
    std::vector<std::string> actual_bicoloured;
    BicolouredMotzkinStream bstream(n <= 5 ? n : 0);
    while (auto p = bstream.next()) actual_bicoloured.push_back(format_motzkin(*p));
    std::sort(actual_bicoloured.begin(), actual_bicoloured.end());
    CHECK(actual_bicoloured == expected_bicoloured);
  }
}

TEST_CASE("av321 stream matches the brute-force filter as a set, n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    std::set<std::vector<int>> expected;
    for (const Permutation& p : oracles::all_permutations(n))
      if (!oracles::contains_321_cubic(p)) expected.insert(p.images());

    std::set<std::vector<int>> actual;
    std::int64_t count = 0;
    Av321Stream stream(n);
    while (auto p = stream.next()) {
      actual.insert(p->images());
      ++count;
    }
    CHECK(count == catalan(n));              // no duplicates
    CHECK(std::cmp_equal(expected.size(), count));
    CHECK(actual == expected);
  }
}
