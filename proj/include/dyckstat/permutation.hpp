#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dyckstat/errors.hpp"

namespace dyckstat {

// Permutation of {1..n} in one-line notation.  Immutable.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

// Comma-separated one-line notation, e.g. "3,1,2"; an optional surrounding
// bracket pair is accepted on input but never printed.  The empty string is
// the empty permutation.
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& p);

Permutation inverse(const Permutation& p);

// True iff no i < j < k has p(i) > p(j) > p(k).  Single left-to-right scan,
// O(n); the cubic definition lives in the tests as the oracle.
bool is_321_avoiding(const Permutation& p);

enum class IndexKind : std::uint8_t { Excedance, Fixpoint, Deficiency };

// Full per-index classification, computed eagerly in one pass together with
// the inverse: every consumer needs all of it.
class IndexClassification {
public:
  int size() const { return static_cast<int>(kind_.size()); }

  IndexKind kind(int k) const { return kind_[static_cast<std::size_t>(k - 1)]; }
  bool double_deficiency(int k) const { return double_deficiency_[static_cast<std::size_t>(k - 1)]; }
  bool double_excedance(int k) const { return double_excedance_[static_cast<std::size_t>(k - 1)]; }

  std::vector<int> fixpoints() const;
  std::vector<int> excedances() const;
  std::vector<int> double_deficiencies() const;
  std::vector<int> double_excedances() const;
  // Fixpoints and deficiencies together: {k : p(k) <= k}.
  std::vector<int> weak_deficiencies() const;

private:
  friend IndexClassification classify(const Permutation&);
  std::vector<IndexKind> kind_;
  std::vector<bool> double_deficiency_;
  std::vector<bool> double_excedance_;
};

IndexClassification classify(const Permutation& p);

}  // namespace dyckstat
