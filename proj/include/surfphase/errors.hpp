#pragma once

#include <stdexcept>
#include <string>

namespace surfphase {

// Input file missing or malformed. CLI maps this to exit code 1.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arguments violate an operation's preconditions. CLI maps this to exit code 2.
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// An internal cross-check failed; indicates a bug, never an input problem.
// CLI maps this to exit code 3.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace surfphase
