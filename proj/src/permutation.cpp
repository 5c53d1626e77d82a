#include "dyckstat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace dyckstat {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

void validate(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int v = images[i];
    if (v < 1 || v > n)
      throw ParseError(i + 1, "value " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
    if (seen[static_cast<std::size_t>(v - 1)])
      throw ParseError(i + 1, "duplicate value " + std::to_string(v));
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  validate(images_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    text.remove_prefix(1);
    text.remove_suffix(1);
    text = trim(text);
  }
  std::vector<int> images;
  if (!text.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = text.find(',', pos);
      std::string_view token =
          trim(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
      if (token.empty()) throw ParseError(pos + 1, "empty entry");
      int value = 0;
      for (char ch : token) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError(pos + 1, std::string("invalid entry '") + std::string(token) + "'");
        value = value * 10 + (ch - '0');
        if (value > 1'000'000) throw ParseError(pos + 1, "entry too large");
      }
      images.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return Permutation(std::move(images));
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.images().size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(p.images()[i]);
  }
  return out;
}

Permutation inverse(const Permutation& p) {
  std::vector<int> inv(p.images().size());
  for (int k = 1; k <= p.size(); ++k) inv[static_cast<std::size_t>(p(k) - 1)] = k;
  return Permutation(std::move(inv));
}

bool is_321_avoiding(const Permutation& p) {
  // Track the largest value that already has a bigger element before it; any
  // later smaller value completes a decreasing triple.
  int running_max = 0;
  int best_middle = 0;
  for (int v : p.images()) {
    if (v < best_middle) return false;
    if (v < running_max) best_middle = std::max(best_middle, v);
    running_max = std::max(running_max, v);
  }
  return true;
}

std::vector<int> IndexClassification::fixpoints() const {
  std::vector<int> out;
  for (int k = 1; k <= size(); ++k)
    if (kind(k) == IndexKind::Fixpoint) out.push_back(k);
  return out;
}

std::vector<int> IndexClassification::excedances() const {
  std::vector<int> out;
  for (int k = 1; k <= size(); ++k)
    if (kind(k) == IndexKind::Excedance) out.push_back(k);
  return out;
}

std::vector<int> IndexClassification::double_deficiencies() const {
  std::vector<int> out;
  for (int k = 1; k <= size(); ++k)
    if (double_deficiency(k)) out.push_back(k);
  return out;
}

std::vector<int> IndexClassification::double_excedances() const {
  std::vector<int> out;
  for (int k = 1; k <= size(); ++k)
    if (double_excedance(k)) out.push_back(k);
  return out;
}

std::vector<int> IndexClassification::weak_deficiencies() const {
  std::vector<int> out;
  for (int k = 1; k <= size(); ++k)
    if (kind(k) != IndexKind::Excedance) out.push_back(k);
  return out;
}

IndexClassification classify(const Permutation& p) {
  const int n = p.size();
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) inv[static_cast<std::size_t>(p(k) - 1)] = k;

  IndexClassification cls;
  cls.kind_.resize(static_cast<std::size_t>(n));
  cls.double_deficiency_.resize(static_cast<std::size_t>(n));
  cls.double_excedance_.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const int image = p(k);
    const int preimage = inv[static_cast<std::size_t>(k - 1)];
    const std::size_t i = static_cast<std::size_t>(k - 1);
    cls.kind_[i] = image > k   ? IndexKind::Excedance
                   : image == k ? IndexKind::Fixpoint
                                : IndexKind::Deficiency;
    cls.double_deficiency_[i] = image < k && k < preimage;
    cls.double_excedance_[i] = preimage < k && k < image;
  }
  return cls;
}

}  // namespace dyckstat
