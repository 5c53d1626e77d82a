#pragma once

#include <string>
#include <vector>

#include "dyckstat/dyck_path.hpp"
#include "dyckstat/permutation.hpp"

namespace dyckstat {

// Index sets on a Dyck path, all over k = 1..n and returned sorted.
//
//   D = {k : c_{k+1} = c_k - 1}
//   F = {k : r_{k+1+c_{k+1}} = r_{k-1} + c_{k+1} + 2}
//   N = rows that do not contain a valley
std::vector<int> set_D(const AreaProfile& profile);
std::vector<int> set_F(const AreaProfile& profile);
std::vector<int> set_N(const DyckPath& path);

// N ∩ D ⊆ F
bool gorenstein_predicate(const DyckPath& path);
// N ∩ D = ∅
bool double_centraliser_predicate(const DyckPath& path);

// |{k : p(k) < k < p^{-1}(k)}|
int statistic_double_deficiencies(const Permutation& p);

// "{2,4,5}"; the empty set prints as "{}".
std::string format_index_set(const std::vector<int>& set);

// Sorted-set helpers shared by the predicates and the verification suite.
std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b);
bool is_subset(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace dyckstat
