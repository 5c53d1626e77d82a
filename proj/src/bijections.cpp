#include "dyckstat/bijections.hpp"

#include <cassert>
#include <stdexcept>

namespace dyckstat {

Permutation bjs_forward(const DyckPath& path) {
  const int n = path.semilength();
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  std::vector<bool> row_taken(static_cast<std::size_t>(n) + 1, false);
  for (const Valley& v : valleys(path)) {
    images[static_cast<std::size_t>(v.east_index - 1)] = v.north_index;
    row_taken[static_cast<std::size_t>(v.north_index)] = true;
  }
  // Two-pointer fill: free rows are consumed bottom-up as the columns go by.
  int lowest_free = 1;
  for (int k = 1; k <= n; ++k) {
    if (images[static_cast<std::size_t>(k - 1)] != 0) continue;
    while (row_taken[static_cast<std::size_t>(lowest_free)]) ++lowest_free;
    images[static_cast<std::size_t>(k - 1)] = lowest_free;
    ++lowest_free;
  }
  return Permutation(std::move(images));
}

DyckPath bjs_inverse(const Permutation& p) {
  if (!is_321_avoiding(p)) throw std::invalid_argument("permutation contains a 321 pattern");
  const int n = p.size();

  // Excedance crosses in position order; their values must also increase,
  // otherwise two excedances and a later smaller value would form a 321.
  std::vector<Valley> crosses;
  for (int k = 1; k <= n; ++k)
    if (p(k) > k) crosses.push_back(Valley{k, p(k)});
  for (std::size_t i = 1; i < crosses.size(); ++i)
    assert(crosses[i - 1].north_index < crosses[i].north_index);

  // Tightest staircase with valley corners exactly at the crosses.
  std::vector<Step> steps;
  steps.reserve(2 * static_cast<std::size_t>(n));
  int norths = 0;
  int easts = 0;
  for (const Valley& v : crosses) {
    for (; norths < v.north_index - 1; ++norths) steps.push_back(Step::North);
    for (; easts < v.east_index; ++easts) steps.push_back(Step::East);
  }
  for (; norths < n; ++norths) steps.push_back(Step::North);
  for (; easts < n; ++easts) steps.push_back(Step::East);
  return DyckPath(std::move(steps));
}

BicolouredMotzkinPath fz_forward(const Permutation& p) {
  const IndexClassification cls = classify(p);
  std::vector<MotzkinStep> steps;
  steps.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) {
    switch (cls.kind(i)) {
      case IndexKind::Fixpoint:
        steps.push_back(MotzkinStep::LevelZero);
        break;
      case IndexKind::Excedance:
        steps.push_back(cls.double_excedance(i) ? MotzkinStep::LevelBlue : MotzkinStep::Up);
        break;
      case IndexKind::Deficiency:
        steps.push_back(cls.double_deficiency(i) ? MotzkinStep::LevelRed : MotzkinStep::Down);
        break;
    }
  }
  try {
    return BicolouredMotzkinPath(std::move(steps));
  } catch (const ParseError& e) {
    throw std::invalid_argument(
        std::string("image is not a valid bicoloured Motzkin path (") + e.what() +
        "); input permutation is not 321-avoiding");
  }
}

Permutation fz_inverse(const BicolouredMotzkinPath& path) {
  const auto& steps = path.steps();
  const int n = path.length();
  std::vector<int> exc_positions, exc_values, other_positions, other_values;
  for (int i = 1; i <= n; ++i) {
    switch (steps[static_cast<std::size_t>(i - 1)]) {
      case MotzkinStep::Up:
        exc_positions.push_back(i);
        other_values.push_back(i);
        break;
      case MotzkinStep::Down:
        other_positions.push_back(i);
        exc_values.push_back(i);
        break;
      case MotzkinStep::LevelBlue:
        exc_positions.push_back(i);
        exc_values.push_back(i);
        break;
      case MotzkinStep::LevelRed:
      case MotzkinStep::LevelZero:
        other_positions.push_back(i);
        other_values.push_back(i);
        break;
    }
  }
  // Path validity gives |exc_positions| = |exc_values|; FIFO matching is the
  // only assignment whose excedance and non-excedance subsequences both
  // increase, which 321-avoidance forces.
  assert(exc_positions.size() == exc_values.size());
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (std::size_t j = 0; j < exc_positions.size(); ++j)
    images[static_cast<std::size_t>(exc_positions[j] - 1)] = exc_values[j];
  for (std::size_t j = 0; j < other_positions.size(); ++j)
    images[static_cast<std::size_t>(other_positions[j] - 1)] = other_values[j];
  return Permutation(std::move(images));
}

}  // namespace dyckstat
