#include "dyckstat/dyck_path.hpp"

#include <cassert>
#include <cctype>

namespace dyckstat {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

void validate(const std::vector<Step>& steps) {
  int north = 0;
  int east = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::North) {
      ++north;
    } else {
      ++east;
      if (east > north)
        throw ParseError(i + 1, "east step drops below the diagonal");
    }
  }
  if (north != east)
    throw ParseError(steps.size() + 1,
                     "unbalanced word: " + std::to_string(north) + " north vs " +
                         std::to_string(east) + " east steps");
}

}  // namespace

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) { validate(steps_); }

DyckPath parse_dyck(std::string_view text) {
  text = trim(text);
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'N': steps.push_back(Step::North); break;
      case 'E': steps.push_back(Step::East); break;
      default:
        throw ParseError(i + 1, std::string("unexpected character '") + text[i] +
                                    "', expected 'N' or 'E'");
    }
  }
  return DyckPath(std::move(steps));
}

std::string format_dyck(const DyckPath& path) {
  std::string out;
  out.reserve(path.steps().size());
  for (Step s : path.steps()) out.push_back(s == Step::North ? 'N' : 'E');
  return out;
}

int AreaProfile::row(int k) const {
  assert(k >= 0 && k <= semilength());
  return row_[static_cast<std::size_t>(k)];
}

int AreaProfile::column(int k) const {
  assert(k >= 1 && k <= semilength() + 1);
  return column_[static_cast<std::size_t>(k - 1)];
}

AreaProfile area_profile(const DyckPath& path) {
  const int n = path.semilength();
  AreaProfile profile;
  profile.row_.reserve(static_cast<std::size_t>(n) + 1);
  profile.column_.reserve(static_cast<std::size_t>(n) + 1);
  profile.row_.push_back(-1);  // r_0 sentinel

  // r_k = (k - 1) - #easts before the k-th north step;
  // c_k = #norths before the k-th east step - k.
  int north = 0;
  int east = 0;
  for (Step s : path.steps()) {
    if (s == Step::North) {
      ++north;
      profile.row_.push_back(north - 1 - east);
    } else {
      ++east;
      profile.column_.push_back(north - east);
    }
  }
  profile.column_.push_back(-1);  // c_{n+1} sentinel
  return profile;
}

std::vector<Valley> valleys(const DyckPath& path) {
  std::vector<Valley> result;
  const auto& steps = path.steps();
  int north = 0;
  int east = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::North) {
      ++north;
      if (i > 0 && steps[i - 1] == Step::East) result.push_back(Valley{east, north});
    } else {
      ++east;
    }
  }
  return result;
}

std::string format_area_sequence(const std::vector<int>& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(seq[i]);
  }
  out.push_back(')');
  return out;
}

}  // namespace dyckstat
