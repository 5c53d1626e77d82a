#include "dyckstat/enumeration.hpp"

#include <cassert>
#include <stdexcept>

#include "dyckstat/bijections.hpp"

namespace dyckstat {

namespace {

void check_nonnegative(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
}

std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
  return out;
}

// Completions of a partial Dyck word: paths of `remaining` steps from height
// `height` to zero that never go negative.  Entry [remaining][height].
std::vector<std::vector<std::int64_t>> completion_table(int n) {
  const int len = 2 * n;
  std::vector<std::vector<std::int64_t>> table(
      static_cast<std::size_t>(len) + 1,
      std::vector<std::int64_t>(static_cast<std::size_t>(n) + 2, 0));
  table[0][0] = 1;
  for (int m = 1; m <= len; ++m)
    for (int h = 0; h <= n; ++h) {
      // Go up (the unreachable entries stay zero), or down when above ground.
      std::int64_t total = table[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(h + 1)];
      if (h >= 1)
        total = checked_add(total, table[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(h - 1)],
                            "dyck completion count");
      table[static_cast<std::size_t>(m)][static_cast<std::size_t>(h)] = total;
    }
  return table;
}

}  // namespace

std::int64_t catalan(int n) {
  check_nonnegative(n);
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t total = 0;
    for (int k = 0; k < m; ++k)
      total = checked_add(
          total,
          checked_mul(c[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(m - 1 - k)], "catalan"),
          "catalan");
    c[static_cast<std::size_t>(m)] = total;
  }
  return c[static_cast<std::size_t>(n)];
}

std::int64_t motzkin_number(int n) {
  check_nonnegative(n);
  std::vector<std::int64_t> m(static_cast<std::size_t>(n) + 1);
  m[0] = 1;
  if (n >= 1) m[1] = 1;
  for (int i = 2; i <= n; ++i) {
    std::int64_t total = m[static_cast<std::size_t>(i - 1)];
    for (int k = 0; k <= i - 2; ++k)
      total = checked_add(
          total,
          checked_mul(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(i - 2 - k)], "motzkin"),
          "motzkin");
    m[static_cast<std::size_t>(i)] = total;
  }
  return m[static_cast<std::size_t>(n)];
}

std::int64_t riordan_number(int n) {
  check_nonnegative(n);
  std::vector<std::int64_t> r(static_cast<std::size_t>(n) + 1);
  r[0] = 1;
  if (n >= 1) r[1] = 0;
  for (int i = 2; i <= n; ++i) {
    // (i-1)(2 R_{i-1} + 3 R_{i-2}) / (i+1); the division is exact.
    const __int128 numerator =
        static_cast<__int128>(i - 1) *
        (2 * static_cast<__int128>(r[static_cast<std::size_t>(i - 1)]) +
         3 * static_cast<__int128>(r[static_cast<std::size_t>(i - 2)]));
    assert(numerator % (i + 1) == 0);
    const __int128 value = numerator / (i + 1);
    if (value > INT64_MAX) throw std::overflow_error("riordan: value exceeds 64-bit range");
    r[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(value);
  }
  return r[static_cast<std::size_t>(n)];
}

std::int64_t dyck_rank(const DyckPath& path) {
  const int n = path.semilength();
  const auto table = completion_table(n);
  std::int64_t rank = 0;
  int height = 0;
  int position = 0;
  for (Step s : path.steps()) {
    const int remaining = 2 * n - position - 1;
    if (s == Step::East) {
      // Everything that goes North here comes first.
      if (height + 1 <= remaining)
        rank = checked_add(rank,
                           table[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(height + 1)],
                           "dyck rank");
      --height;
    } else {
      ++height;
    }
    ++position;
  }
  return rank;
}

DyckPath dyck_unrank(int n, std::int64_t rank) {
  check_nonnegative(n);
  if (rank < 0 || rank >= catalan(n)) throw std::out_of_range("dyck rank out of range");
  const auto table = completion_table(n);
  std::vector<Step> steps;
  steps.reserve(2 * static_cast<std::size_t>(n));
  int height = 0;
  for (int position = 0; position < 2 * n; ++position) {
    const int remaining = 2 * n - position - 1;
    const std::int64_t with_north =
        height + 1 <= remaining
            ? table[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(height + 1)]
            : 0;
    if (rank < with_north) {
      steps.push_back(Step::North);
      ++height;
    } else {
      rank -= with_north;
      steps.push_back(Step::East);
      --height;
    }
  }
  assert(rank == 0);
  return DyckPath(std::move(steps));
}

DyckPathStream::DyckPathStream(int n) : n_(n) {
  check_nonnegative(n);
  remaining_ = catalan(n);
  // Lexicographic minimum: N^n E^n.
  word_.assign(static_cast<std::size_t>(n), Step::North);
  word_.resize(2 * static_cast<std::size_t>(n), Step::East);
}

DyckPathStream::DyckPathStream(int n, std::int64_t first_rank, std::int64_t last_rank)
    : n_(n) {
  check_nonnegative(n);
  const std::int64_t total = catalan(n);
  if (first_rank < 0 || last_rank < first_rank || last_rank > total)
    throw std::out_of_range("dyck rank range out of range");
  remaining_ = last_rank - first_rank;
  word_ = remaining_ > 0 ? dyck_unrank(n, first_rank).steps() : std::vector<Step>{};
}

std::optional<DyckPath> DyckPathStream::next() {
  if (remaining_ == 0) return std::nullopt;
  DyckPath current{std::vector<Step>(word_)};
  --remaining_;
  if (remaining_ > 0 && !advance()) {
    assert(false);  // the rank count and the successor scan must agree
    remaining_ = 0;
  }
  return current;
}

bool DyckPathStream::advance() {
  // Rightmost North that can become East while the prefix keeps #N >= #E;
  // then the smallest completion N...NE...E.
  int norths = n_;
  int easts = n_;
  for (int i = 2 * n_ - 1; i >= 0; --i) {
    if (word_[static_cast<std::size_t>(i)] == Step::North)
      --norths;
    else
      --easts;
    if (word_[static_cast<std::size_t>(i)] == Step::North && easts + 1 <= norths && easts < n_) {
      word_[static_cast<std::size_t>(i)] = Step::East;
      std::size_t j = static_cast<std::size_t>(i) + 1;
      for (int k = 0; k < n_ - norths; ++k) word_[j++] = Step::North;
      for (int k = 0; k < n_ - easts - 1; ++k) word_[j++] = Step::East;
      assert(j == word_.size());
      return true;
    }
  }
  return false;
}

namespace detail {

MotzkinWordEngine::MotzkinWordEngine(int n, LevelRule rule) : n_(n), rule_(rule) {
  check_nonnegative(n);
  word_.resize(static_cast<std::size_t>(n));
  height_before_.resize(static_cast<std::size_t>(n));
}

bool MotzkinWordEngine::letter_allowed(MotzkinStep step, int height_before, int steps_after) const {
  int height_after = height_before;
  switch (step) {
    case MotzkinStep::Up:
      ++height_after;
      break;
    case MotzkinStep::Down:
      if (height_before == 0) return false;
      --height_after;
      break;
    case MotzkinStep::LevelZero:
      if (rule_ == LevelRule::GroundPlusColours && height_before != 0) return false;
      if (rule_ == LevelRule::AboveGroundOnly && height_before == 0) return false;
      break;
    case MotzkinStep::LevelBlue:
    case MotzkinStep::LevelRed:
      if (rule_ != LevelRule::GroundPlusColours || height_before == 0) return false;
      break;
  }
  if (height_after > steps_after) return false;
  // With levels banned at height zero, a path stranded there with one step
  // left cannot finish.
  if (rule_ == LevelRule::AboveGroundOnly && height_after == 0 && steps_after == 1) return false;
  return true;
}

bool MotzkinWordEngine::fill_smallest(std::size_t from) {
  constexpr MotzkinStep alphabet[] = {MotzkinStep::Up, MotzkinStep::Down, MotzkinStep::LevelZero,
                                      MotzkinStep::LevelBlue, MotzkinStep::LevelRed};
  int height = from == 0 ? 0 : height_before_[from - 1];
  if (from > 0) {
    const MotzkinStep prev = word_[from - 1];
    if (prev == MotzkinStep::Up) ++height;
    if (prev == MotzkinStep::Down) --height;
  }
  for (std::size_t i = from; i < word_.size(); ++i) {
    const int steps_after = static_cast<int>(word_.size() - i) - 1;
    bool placed = false;
    for (MotzkinStep candidate : alphabet) {
      if (letter_allowed(candidate, height, steps_after)) {
        word_[i] = candidate;
        height_before_[i] = height;
        if (candidate == MotzkinStep::Up) ++height;
        if (candidate == MotzkinStep::Down) --height;
        placed = true;
        break;
      }
    }
    if (!placed) return false;
  }
  return true;
}

std::optional<std::vector<MotzkinStep>> MotzkinWordEngine::next() {
  if (exhausted_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!fill_smallest(0)) {
      exhausted_ = true;
      return std::nullopt;
    }
    return word_;
  }
  constexpr MotzkinStep alphabet[] = {MotzkinStep::Up, MotzkinStep::Down, MotzkinStep::LevelZero,
                                      MotzkinStep::LevelBlue, MotzkinStep::LevelRed};
  for (std::size_t i = word_.size(); i-- > 0;) {
    const int steps_after = static_cast<int>(word_.size() - i) - 1;
    const auto current_rank = static_cast<std::size_t>(word_[i]);
    for (std::size_t r = current_rank + 1; r < 5; ++r) {
      const MotzkinStep candidate = alphabet[r];
      if (!letter_allowed(candidate, height_before_[i], steps_after)) continue;
      word_[i] = candidate;
      if (fill_smallest(i + 1)) return word_;
      // A legal letter always leaves a completable state, so this is
      // unreachable; restore and keep scanning just in case.
      word_[i] = alphabet[current_rank];
    }
  }
  exhausted_ = true;
  return std::nullopt;
}

}  // namespace detail

std::optional<BicolouredMotzkinPath> BicolouredMotzkinStream::next() {
  auto steps = engine_.next();
  if (!steps) return std::nullopt;
  return BicolouredMotzkinPath(std::move(*steps));
}

namespace {

MotzkinPath to_plain(std::vector<MotzkinStep> steps) {
  std::vector<PlainStep> plain;
  plain.reserve(steps.size());
  for (MotzkinStep s : steps) {
    switch (s) {
      case MotzkinStep::Up: plain.push_back(PlainStep::Up); break;
      case MotzkinStep::Down: plain.push_back(PlainStep::Down); break;
      default: plain.push_back(PlainStep::Level); break;
    }
  }
  return MotzkinPath(std::move(plain));
}

}  // namespace

std::optional<MotzkinPath> MotzkinStream::next() {
  auto steps = engine_.next();
  if (!steps) return std::nullopt;
  return to_plain(std::move(*steps));
}

std::optional<MotzkinPath> RiordanStream::next() {
  auto steps = engine_.next();
  if (!steps) return std::nullopt;
  return to_plain(std::move(*steps));
}

std::optional<Permutation> Av321Stream::next() {
  auto path = paths_.next();
  if (!path) return std::nullopt;
  return bjs_forward(*path);
}

}  // namespace dyckstat
