// Independent brute-force oracles used only by the tests.  Everything here
// recomputes results straight from the definitions, on purpose along a
// different code path than the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "dyckstat/dyck_path.hpp"
#include "dyckstat/permutation.hpp"

namespace oracles {

// Region between path and diagonal as an explicit cell matrix:
// cell (i, j) is filled iff it lies strictly above the diagonal (j > i) and
// weakly below the path.
inline std::vector<std::vector<bool>> region_cells(const dyckstat::DyckPath& path) {
  const int n = path.semilength();
  std::vector<int> column_height;  // norths before the k-th east step
  int norths = 0;
  for (dyckstat::Step s : path.steps()) {
    if (s == dyckstat::Step::North) ++norths;
    else column_height.push_back(norths);
  }
  std::vector<std::vector<bool>> cells(static_cast<std::size_t>(n) + 1,
                                       std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          j > i && j <= column_height[static_cast<std::size_t>(i - 1)];
  return cells;
}

inline std::vector<int> row_area_by_cells(const dyckstat::DyckPath& path) {
  const int n = path.semilength();
  const auto cells = region_cells(path);
  std::vector<int> row{-1};
  for (int j = 1; j <= n; ++j) {
    int count = 0;
    for (int i = 1; i <= n; ++i)
      if (cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ++count;
    row.push_back(count);
  }
  return row;
}

inline std::vector<int> column_area_by_cells(const dyckstat::DyckPath& path) {
  const int n = path.semilength();
  const auto cells = region_cells(path);
  std::vector<int> column;
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int j = 1; j <= n; ++j)
      if (cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ++count;
    column.push_back(count);
  }
  column.push_back(-1);
  return column;
}

// The pattern definition, cubic.
inline bool contains_321_cubic(const dyckstat::Permutation& p) {
  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (p(i) > p(j) && p(j) > p(k)) return true;
  return false;
}

// Literal filling rule on an explicit matrix: crosses into the valleys, then
// left to right each cross-free column gets the lowest row that is cross-free
// across the whole matrix.
inline dyckstat::Permutation bjs_by_rescan(const dyckstat::DyckPath& path) {
  const int n = path.semilength();
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (const dyckstat::Valley& v : dyckstat::valleys(path))
    images[static_cast<std::size_t>(v.east_index - 1)] = v.north_index;
  for (int col = 1; col <= n; ++col) {
    if (images[static_cast<std::size_t>(col - 1)] != 0) continue;
    for (int row = 1; row <= n; ++row) {
      if (std::find(images.begin(), images.end(), row) == images.end()) {
        images[static_cast<std::size_t>(col - 1)] = row;
        break;
      }
    }
  }
  return dyckstat::Permutation(std::move(images));
}

inline std::vector<dyckstat::Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<dyckstat::Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// All valid words of the given length over an alphabet, by filtering every
// possible string; validity is delegated to the library parser.
template <typename Parse>
std::vector<std::string> filter_all_words(const std::string& alphabet, int length, Parse parse) {
  std::vector<std::string> out;
  std::string word(static_cast<std::size_t>(length), alphabet[0]);
  std::vector<std::size_t> digits(static_cast<std::size_t>(length), 0);
  while (true) {
    bool valid = true;
    try {
      parse(word);
    } catch (...) {
      valid = false;
    }
    if (valid) out.push_back(word);
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (++digits[i] < alphabet.size()) {
        word[i] = alphabet[digits[i]];
        break;
      }
      digits[i] = 0;
      word[i] = alphabet[0];
    }
    if (i == digits.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// C_n = C_{n-1} * 2(2n-1) / (n+1), exact at every step.
inline std::int64_t catalan_by_product(int n) {
  __int128 c = 1;
  for (int i = 1; i <= n; ++i) {
    c = c * 2 * (2 * i - 1);
    if (c % (i + 1) != 0) return -1;
    c /= (i + 1);
  }
  return static_cast<std::int64_t>(c);
}

}  // namespace oracles
