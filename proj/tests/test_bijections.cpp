#include <doctest.h>

#include <algorithm>
#include <set>

#include "dyckstat/bijections.hpp"
#include "dyckstat/enumeration.hpp"
#include "oracles.hpp"
#include "worked_example.hpp"

using namespace dyckstat;

TEST_CASE("bjs forward, frozen examples") {
  CHECK(bjs_forward(parse_dyck(worked_example::kDyckWord)).images() ==
        worked_example::kPermutation);
  CHECK(bjs_forward(parse_dyck("NNNEEE")) == Permutation::identity(3));
  CHECK(bjs_forward(parse_dyck("NENE")) == parse_permutation("2,1"));
  CHECK(bjs_forward(DyckPath{}) == Permutation{});
}

TEST_CASE("bjs inverse, frozen examples") {
  CHECK(bjs_inverse(Permutation::identity(3)) == parse_dyck("NNNEEE"));
  CHECK(bjs_inverse(parse_permutation("2,1")) == parse_dyck("NENE"));
  CHECK(bjs_inverse(Permutation{worked_example::kPermutation}) ==
        parse_dyck(worked_example::kDyckWord));
  CHECK_THROWS_AS(bjs_inverse(parse_permutation("3,2,1")), std::invalid_argument);
}

TEST_CASE("bjs agrees with the matrix-rescan oracle up to n = 8") {
  for (int n = 0; n <= 8; ++n) {
    DyckPathStream stream(n);
    while (auto path = stream.next()) {
      CHECK(bjs_forward(*path) == oracles::bjs_by_rescan(*path));
    }
  }
}

TEST_CASE("bjs is a bijection onto the 321-avoiding permutations, n <= 10") {
  for (int n = 0; n <= 10; ++n) {
    std::int64_t count = 0;
    std::set<std::vector<int>> images;
    DyckPathStream stream(n);
    while (auto path = stream.next()) {
      const Permutation pi = bjs_forward(*path);
      CHECK(is_321_avoiding(pi));
      CHECK(bjs_inverse(pi) == *path);  // round trip
      images.insert(pi.images());
      ++count;
    }
    CHECK(count == catalan(n));
    CHECK(std::cmp_equal(images.size(), count));  // injective
  }
}

TEST_CASE("valley crosses of the bjs image are its excedances, n <= 9") {
  for (int n = 0; n <= 9; ++n) {
    DyckPathStream stream(n);
    while (auto path = stream.next()) {
      const Permutation pi = bjs_forward(*path);
      std::vector<std::pair<int, int>> excedances;
      for (int k = 1; k <= n; ++k)
        if (pi(k) > k) excedances.emplace_back(k, pi(k));
      std::vector<std::pair<int, int>> valley_cells;
      for (const Valley& v : valleys(*path)) valley_cells.emplace_back(v.east_index, v.north_index);
      CHECK(excedances == valley_cells);
    }
  }
}

TEST_CASE("fz forward, frozen examples") {
  CHECK(format_motzkin(fz_forward(Permutation{worked_example::kPermutation})) ==
        worked_example::kMotzkinWord);
  CHECK(format_motzkin(fz_forward(Permutation::identity(4))) == "LLLL");
  CHECK(format_motzkin(fz_forward(parse_permutation("2,1"))) == "UD");
  CHECK_THROWS_AS(fz_forward(parse_permutation("3,2,1")), std::invalid_argument);
}

TEST_CASE("fz image of the worked example, step by step") {
  const BicolouredMotzkinPath image = fz_forward(Permutation{worked_example::kPermutation});
  const auto at = [&](int i) { return image.steps()[static_cast<std::size_t>(i - 1)]; };
  for (int i : {1, 8, 9, 11}) CHECK(at(i) == MotzkinStep::Up);
  for (int i : {6, 15, 16, 17}) CHECK(at(i) == MotzkinStep::Down);
  for (int i : {7}) CHECK(at(i) == MotzkinStep::LevelZero);
  for (int i : {3, 13, 14}) CHECK(at(i) == MotzkinStep::LevelBlue);
  for (int i : {2, 4, 5, 10, 12}) CHECK(at(i) == MotzkinStep::LevelRed);
}

TEST_CASE("fz inverse, frozen examples") {
  CHECK(fz_inverse(parse_motzkin("LLLL")) == Permutation::identity(4));
  CHECK(fz_inverse(parse_motzkin("UD")) == parse_permutation("2,1"));
  CHECK(fz_inverse(parse_motzkin(worked_example::kMotzkinWord)).images() ==
        worked_example::kPermutation);
}

TEST_CASE("fz round trips in both directions, n <= 9") {
  for (int n = 0; n <= 9; ++n) {
    // over 321-avoiding permutations
    Av321Stream perms(n);
    while (auto pi = perms.next()) {
      const BicolouredMotzkinPath image = fz_forward(*pi);
      CHECK(fz_inverse(image) == *pi);
    }
    // over bicoloured Motzkin paths
    std::int64_t count = 0;
    BicolouredMotzkinStream paths(n);
    while (auto m = paths.next()) {
      const Permutation pi = fz_inverse(*m);
      CHECK(is_321_avoiding(pi));
      CHECK(fz_forward(pi) == *m);
      ++count;
    }
    CHECK(count == catalan(n));
  }
}

TEST_CASE("fz step counts follow the index classification, n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    Av321Stream perms(n);
    while (auto pi = perms.next()) {
      const IndexClassification cls = classify(*pi);
      const BicolouredMotzkinPath image = fz_forward(*pi);
      const auto count = [&](MotzkinStep s) {
        return std::count(image.steps().begin(), image.steps().end(), s);
      };
      const auto dd = static_cast<std::ptrdiff_t>(cls.double_deficiencies().size());
      const auto de = static_cast<std::ptrdiff_t>(cls.double_excedances().size());
      const auto fix = static_cast<std::ptrdiff_t>(cls.fixpoints().size());
      const auto exc = static_cast<std::ptrdiff_t>(cls.excedances().size());
      CHECK(count(MotzkinStep::Up) == exc - de);
      CHECK(count(MotzkinStep::Down) == exc - de);
      CHECK(count(MotzkinStep::LevelZero) == fix);
      CHECK(count(MotzkinStep::LevelBlue) == de);
      CHECK(count(MotzkinStep::LevelRed) == dd);
    }
  }
}
