#pragma once

#include "dyckstat/dyck_path.hpp"
#include "dyckstat/motzkin.hpp"
#include "dyckstat/permutation.hpp"

namespace dyckstat {

// Dyck path -> 321-avoiding permutation.  Crosses go into the valley cells;
// then, left to right, every cross-free column receives a cross in the
// lowest cross-free row.  The valley crosses are exactly the excedances of
// the result.
Permutation bjs_forward(const DyckPath& path);

// The unique Dyck path whose valleys are the excedance crosses of p.
// Throws std::invalid_argument if p is not 321-avoiding.
DyckPath bjs_inverse(const Permutation& p);

// 321-avoiding permutation -> bicoloured Motzkin path.  Step i is
//   Up        if p(i) > i and p^{-1}(i) > i,
//   Down      if p(i) < i and p^{-1}(i) < i,
//   LevelZero if p(i) = i,
//   LevelBlue if p^{-1}(i) < i < p(i)   (double excedance),
//   LevelRed  if p(i) < i < p^{-1}(i)   (double deficiency).
// The output is validated; invalid output means p was not 321-avoiding, and
// std::invalid_argument is thrown.
BicolouredMotzkinPath fz_forward(const Permutation& p);

// Inverse direction, forced by 321-avoidance: excedance positions (Up and
// Blue indices) are matched in increasing order against excedance values
// (Down and Blue indices), and likewise for the remaining positions/values.
Permutation fz_inverse(const BicolouredMotzkinPath& path);

}  // namespace dyckstat
