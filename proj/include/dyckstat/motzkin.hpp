#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dyckstat/errors.hpp"

namespace dyckstat {

// Enumerator order fixes the stream alphabet order U < D < L < B < R.
enum class MotzkinStep : std::uint8_t {
  Up = 0,
  Down = 1,
  LevelZero = 2,
  LevelBlue = 3,
  LevelRed = 4,
};

char step_char(MotzkinStep step);

// Motzkin path whose level steps carry height information: uncoloured level
// steps ('L') may appear only at height zero, blue and red level steps only
// strictly above it.  The running height never drops below zero and ends at
// zero.
class BicolouredMotzkinPath {
public:
  BicolouredMotzkinPath() = default;
  explicit BicolouredMotzkinPath(std::vector<MotzkinStep> steps);

  int length() const { return static_cast<int>(steps_.size()); }
  const std::vector<MotzkinStep>& steps() const { return steps_; }

  bool operator==(const BicolouredMotzkinPath&) const = default;
  auto operator<=>(const BicolouredMotzkinPath&) const = default;

private:
  std::vector<MotzkinStep> steps_;
};

// Up < Down < Level, consistent with the U < D < L stream order.
enum class PlainStep : std::uint8_t { Up = 0, Down = 1, Level = 2 };

// Ordinary Motzkin path: level steps are uncoloured and may appear at any
// height.  Riordan paths are exactly the ones without a level step at
// height zero.
class MotzkinPath {
public:
  MotzkinPath() = default;
  explicit MotzkinPath(std::vector<PlainStep> steps);

  int length() const { return static_cast<int>(steps_.size()); }
  const std::vector<PlainStep>& steps() const { return steps_; }

  bool has_level_at_height_zero() const;

  bool operator==(const MotzkinPath&) const = default;
  auto operator<=>(const MotzkinPath&) const = default;

private:
  std::vector<PlainStep> steps_;
};

// Strict parser over {U, D, L, B, R}; surrounding whitespace trimmed.
BicolouredMotzkinPath parse_motzkin(std::string_view text);
std::string format_motzkin(const BicolouredMotzkinPath& path);
std::string format_motzkin(const MotzkinPath& path);

}  // namespace dyckstat
