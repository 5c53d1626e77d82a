#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dyckstat/errors.hpp"

namespace dyckstat {

// North < East fixes the lexicographic order used by all enumeration streams.
enum class Step : std::uint8_t { North = 0, East = 1 };

// Lattice path of n north and n east steps from (0,0) to (n,n) that never
// goes below the diagonal y = x.  n = 0 is the empty path.  Immutable.
class DyckPath {
public:
  DyckPath() = default;
  explicit DyckPath(std::vector<Step> steps);

  int semilength() const { return static_cast<int>(steps_.size() / 2); }
  const std::vector<Step>& steps() const { return steps_; }

  bool operator==(const DyckPath&) const = default;
  auto operator<=>(const DyckPath&) const = default;

private:
  std::vector<Step> steps_;
};

// Row- and column-area sequences of a Dyck path, with both sentinel entries
// r_0 = -1 and c_{n+1} = -1 stored explicitly.  r_k counts the full squares
// between the path and the diagonal in the row of the k-th north step, c_k
// the same in the column of the k-th east step.
class AreaProfile {
public:
  int semilength() const { return static_cast<int>(row_.size()) - 1; }

  int row(int k) const;     // r_k for 0 <= k <= n
  int column(int k) const;  // c_k for 1 <= k <= n+1

  const std::vector<int>& row_area() const { return row_; }        // (r_0, ..., r_n)
  const std::vector<int>& column_area() const { return column_; }  // (c_1, ..., c_{n+1})

private:
  friend AreaProfile area_profile(const DyckPath&);
  std::vector<int> row_;
  std::vector<int> column_;
};

// East step directly followed by a north step.  The 1-based ordinals of the
// two steps are also the (column, row) position of the enclosed cell, which
// lies strictly above the diagonal: north_index > east_index.
struct Valley {
  int east_index;
  int north_index;
  bool operator==(const Valley&) const = default;
};

// Strict parser for words over {N, E}; surrounding whitespace is trimmed,
// anything else is rejected with the offending position.
DyckPath parse_dyck(std::string_view text);
std::string format_dyck(const DyckPath& path);

AreaProfile area_profile(const DyckPath& path);

// Valleys in path order; east and north indices are each strictly increasing.
std::vector<Valley> valleys(const DyckPath& path);

// "(-1,0,1,2)"
std::string format_area_sequence(const std::vector<int>& seq);

}  // namespace dyckstat
