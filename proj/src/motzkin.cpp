#include "dyckstat/motzkin.hpp"

#include <cctype>

namespace dyckstat {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

void validate_bicoloured(const std::vector<MotzkinStep>& steps) {
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    switch (steps[i]) {
      case MotzkinStep::Up:
        ++height;
        break;
      case MotzkinStep::Down:
        if (height == 0) throw ParseError(i + 1, "down step below height zero");
        --height;
        break;
      case MotzkinStep::LevelZero:
        if (height != 0)
          throw ParseError(i + 1, "'L' at height " + std::to_string(height) +
                                      ", uncoloured level steps only occur at height zero");
        break;
      case MotzkinStep::LevelBlue:
      case MotzkinStep::LevelRed:
        if (height == 0)
          throw ParseError(i + 1, "coloured level step at height zero");
        break;
    }
  }
  if (height != 0)
    throw ParseError(steps.size() + 1,
                     "path ends at height " + std::to_string(height) + ", expected zero");
}

void validate_plain(const std::vector<PlainStep>& steps) {
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    switch (steps[i]) {
      case PlainStep::Up: ++height; break;
      case PlainStep::Down:
        if (height == 0) throw ParseError(i + 1, "down step below height zero");
        --height;
        break;
      case PlainStep::Level: break;
    }
  }
  if (height != 0)
    throw ParseError(steps.size() + 1,
                     "path ends at height " + std::to_string(height) + ", expected zero");
}

}  // namespace

char step_char(MotzkinStep step) {
  switch (step) {
    case MotzkinStep::Up: return 'U';
    case MotzkinStep::Down: return 'D';
    case MotzkinStep::LevelZero: return 'L';
    case MotzkinStep::LevelBlue: return 'B';
    case MotzkinStep::LevelRed: return 'R';
  }
  return '?';
}

BicolouredMotzkinPath::BicolouredMotzkinPath(std::vector<MotzkinStep> steps)
    : steps_(std::move(steps)) {
  validate_bicoloured(steps_);
}

MotzkinPath::MotzkinPath(std::vector<PlainStep> steps) : steps_(std::move(steps)) {
  validate_plain(steps_);
}

bool MotzkinPath::has_level_at_height_zero() const {
  int height = 0;
  for (PlainStep s : steps_) {
    if (s == PlainStep::Up) ++height;
    else if (s == PlainStep::Down) --height;
    else if (height == 0) return true;
  }
  return false;
}

BicolouredMotzkinPath parse_motzkin(std::string_view text) {
  text = trim(text);
  std::vector<MotzkinStep> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(MotzkinStep::Up); break;
      case 'D': steps.push_back(MotzkinStep::Down); break;
      case 'L': steps.push_back(MotzkinStep::LevelZero); break;
      case 'B': steps.push_back(MotzkinStep::LevelBlue); break;
      case 'R': steps.push_back(MotzkinStep::LevelRed); break;
      default:
        throw ParseError(i + 1, std::string("unexpected character '") + text[i] +
                                    "', expected one of 'UDLBR'");
    }
  }
  return BicolouredMotzkinPath(std::move(steps));
}

std::string format_motzkin(const BicolouredMotzkinPath& path) {
  std::string out;
  out.reserve(path.steps().size());
  for (MotzkinStep s : path.steps()) out.push_back(step_char(s));
  return out;
}

std::string format_motzkin(const MotzkinPath& path) {
  std::string out;
  out.reserve(path.steps().size());
  for (PlainStep s : path.steps()) {
    switch (s) {
      case PlainStep::Up: out.push_back('U'); break;
      case PlainStep::Down: out.push_back('D'); break;
      case PlainStep::Level: out.push_back('L'); break;
    }
  }
  return out;
}

}  // namespace dyckstat
