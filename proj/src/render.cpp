#include "dyckstat/render.hpp"

#include <stdexcept>

namespace dyckstat {

// Layout: each text line alternates edge and cell lanes, two characters per
// cell column.  Line 0 carries the east steps running along the top border;
// line t >= 1 shows lattice row n+1-t.  A '|' in an edge lane is a north
// step crossing that row, a '_' in a cell lane is the east step along the
// cell's bottom edge (such cells always lie strictly above the diagonal).
std::string render_ascii(const DyckPath& path, const std::vector<CellMark>& marks) {
  const int n = path.semilength();
  for (const CellMark& m : marks) {
    if (m.column < 1 || m.column > n || m.row < 1 || m.row > n)
      throw std::invalid_argument("mark (" + std::to_string(m.column) + "," +
                                  std::to_string(m.row) + ") outside the " + std::to_string(n) +
                                  "x" + std::to_string(n) + " array");
  }
  if (n == 0) return "";

  // east_height[k-1]: height of the k-th east step; north_x[l-1]: x-position
  // of the l-th north step.
  std::vector<int> east_height, north_x;
  int norths = 0, easts = 0;
  for (Step s : path.steps()) {
    if (s == Step::North) {
      north_x.push_back(easts);
      ++norths;
    } else {
      east_height.push_back(norths);
      ++easts;
    }
  }

  const std::size_t width = 2 * static_cast<std::size_t>(n);
  std::vector<std::string> lines(static_cast<std::size_t>(n) + 1, std::string(width, ' '));

  for (int k = 1; k <= n; ++k) {
    const int y = east_height[static_cast<std::size_t>(k - 1)];
    // '_' sits at the bottom of its character cell: row y+1, or the border line.
    const std::size_t line = static_cast<std::size_t>(n - y);
    lines[line][2 * static_cast<std::size_t>(k) - 1] = '_';
  }
  for (int l = 1; l <= n; ++l) {
    const int x = north_x[static_cast<std::size_t>(l - 1)];
    const std::size_t line = static_cast<std::size_t>(n + 1 - l);
    lines[line][2 * static_cast<std::size_t>(x)] = '|';
  }
  for (int col = 1; col <= n; ++col) {
    const std::size_t line = static_cast<std::size_t>(n + 1 - col);
    char& cell = lines[line][2 * static_cast<std::size_t>(col) - 1];
    if (cell == ' ') cell = '.';
  }
  for (const CellMark& m : marks)
    lines[static_cast<std::size_t>(n + 1 - m.row)][2 * static_cast<std::size_t>(m.column) - 1] = 'x';

  std::string out;
  for (const std::string& line : lines) {
    std::size_t end = line.find_last_not_of(' ');
    out.append(line, 0, end == std::string::npos ? 0 : end + 1);
    out.push_back('\n');
  }
  return out;
}

}  // namespace dyckstat
