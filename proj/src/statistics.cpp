#include "dyckstat/statistics.hpp"

#include <algorithm>
#include <cassert>

namespace dyckstat {

std::vector<int> set_D(const AreaProfile& profile) {
  std::vector<int> out;
  for (int k = 1; k <= profile.semilength(); ++k)
    if (profile.column(k + 1) == profile.column(k) - 1) out.push_back(k);
  return out;
}

std::vector<int> set_F(const AreaProfile& profile) {
  const int n = profile.semilength();
  std::vector<int> out;
  for (int k = 1; k <= n; ++k) {
    const int c = profile.column(k + 1);
    // k+1+c always lands in 0..n: c <= n-k-1 for k < n, and c_{n+1} = -1.
    assert(k + 1 + c >= 0 && k + 1 + c <= n);
    if (profile.row(k + 1 + c) == profile.row(k - 1) + c + 2) out.push_back(k);
  }
  return out;
}

std::vector<int> set_N(const DyckPath& path) {
  const int n = path.semilength();
  std::vector<bool> has_valley(static_cast<std::size_t>(n) + 1, false);
  for (const Valley& v : valleys(path)) has_valley[static_cast<std::size_t>(v.north_index)] = true;
  std::vector<int> out;
  for (int k = 1; k <= n; ++k)
    if (!has_valley[static_cast<std::size_t>(k)]) out.push_back(k);
  return out;
}

bool gorenstein_predicate(const DyckPath& path) {
  const AreaProfile profile = area_profile(path);
  return is_subset(set_intersection(set_N(path), set_D(profile)), set_F(profile));
}

bool double_centraliser_predicate(const DyckPath& path) {
  return set_intersection(set_N(path), set_D(area_profile(path))).empty();
}

int statistic_double_deficiencies(const Permutation& p) {
  return static_cast<int>(classify(p).double_deficiencies().size());
}

std::string format_index_set(const std::vector<int>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(set[i]);
  }
  out.push_back('}');
  return out;
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace dyckstat
