#pragma once

#include <string>
#include <vector>

#include "dyckstat/dyck_path.hpp"

namespace dyckstat {

// 1-based (column, row) cell coordinates in the n x n array.
struct CellMark {
  int column;
  int row;
  bool operator==(const CellMark&) const = default;
};

// Deterministic ASCII picture of the path over its n x n array: rows are
// printed top to bottom, the diagonal cells as '.', the path with '_' and
// '|', marked cells as 'x'.  Each line is right-trimmed and newline
// terminated; the empty path renders as the empty string.
// Throws std::invalid_argument for marks outside the array.
std::string render_ascii(const DyckPath& path, const std::vector<CellMark>& marks = {});

}  // namespace dyckstat
