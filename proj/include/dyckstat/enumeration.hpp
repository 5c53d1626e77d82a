#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dyckstat/dyck_path.hpp"
#include "dyckstat/motzkin.hpp"
#include "dyckstat/permutation.hpp"

namespace dyckstat {

// Exact counts via the convolution / three-term recurrences.  All arithmetic
// is overflow-checked; std::overflow_error is thrown once a value no longer
// fits in a signed 64-bit integer (Catalan beyond n = 35, Motzkin beyond
// n = 44, Riordan beyond n = 45).
std::int64_t catalan(int n);
std::int64_t motzkin_number(int n);
std::int64_t riordan_number(int n);

// Lexicographic rank (number of strictly smaller paths of the same
// semilength) and its inverse.
std::int64_t dyck_rank(const DyckPath& path);
DyckPath dyck_unrank(int n, std::int64_t rank);

// All Dyck paths of semilength n in lexicographic order with North < East,
// produced one at a time in constant memory.  The two-argument form streams
// the ranks [first_rank, last_rank).
class DyckPathStream {
public:
  explicit DyckPathStream(int n);
  DyckPathStream(int n, std::int64_t first_rank, std::int64_t last_rank);

  std::optional<DyckPath> next();

private:
  bool advance();

  int n_;
  std::int64_t remaining_;
  std::vector<Step> word_;
};

namespace detail {

// Shared successor engine for the three Motzkin-path families.  Words are
// generated in lexicographic order over U < D < L < B < R.
enum class LevelRule : std::uint8_t {
  GroundPlusColours,  // 'L' at height 0 only, 'B'/'R' strictly above
  Anywhere,           // 'L' at any height, no colours
  AboveGroundOnly,    // 'L' strictly above height 0, no colours
};

class MotzkinWordEngine {
public:
  MotzkinWordEngine(int n, LevelRule rule);

  // nullopt once exhausted; the first call yields the lexicographic minimum.
  std::optional<std::vector<MotzkinStep>> next();

private:
  bool letter_allowed(MotzkinStep step, int height_before, int steps_after) const;
  bool fill_smallest(std::size_t from);

  int n_;
  LevelRule rule_;
  bool exhausted_ = false;
  bool started_ = false;
  std::vector<MotzkinStep> word_;
  std::vector<int> height_before_;
};

}  // namespace detail

class BicolouredMotzkinStream {
public:
  explicit BicolouredMotzkinStream(int n)
      : engine_(n, detail::LevelRule::GroundPlusColours) {}
  std::optional<BicolouredMotzkinPath> next();

private:
  detail::MotzkinWordEngine engine_;
};

class MotzkinStream {
public:
  explicit MotzkinStream(int n) : engine_(n, detail::LevelRule::Anywhere) {}
  std::optional<MotzkinPath> next();

private:
  detail::MotzkinWordEngine engine_;
};

class RiordanStream {
public:
  explicit RiordanStream(int n) : engine_(n, detail::LevelRule::AboveGroundOnly) {}
  std::optional<MotzkinPath> next();

private:
  detail::MotzkinWordEngine engine_;
};

// All 321-avoiding permutations of {1..n}, as the images of the Dyck stream;
// the order is the one induced by the Dyck order, not permutation-lex.
class Av321Stream {
public:
  explicit Av321Stream(int n) : paths_(n) {}
  std::optional<Permutation> next();

private:
  DyckPathStream paths_;
};

}  // namespace dyckstat
