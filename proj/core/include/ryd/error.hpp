#pragma once

#include <stdexcept>
#include <string>

namespace ryd {

// Bad family/rank or other unsupported configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed shape text or invalid shape for the requested family.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Internal consistency failure; seeing one means a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ryd
