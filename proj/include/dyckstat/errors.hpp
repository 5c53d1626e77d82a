#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dyckstat {

// Raised by the text parsers.  `position` is the 1-based offset of the first
// offending character within the word; errors detected only at end of input
// (missing steps) point one past the last character.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace dyckstat
