#pragma once

#include <stdexcept>
#include <string>

namespace schedgame {

// Error taxonomy mirrored by the CLI exit codes:
//   validation_error -> 2, guard_error -> 3, bound_violation_error -> 4.
// internal_error signals a broken library invariant and is never expected.

class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

class bound_violation_error : public std::runtime_error {
 public:
  explicit bound_violation_error(const std::string& what) : std::runtime_error(what) {}
};

class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace schedgame
