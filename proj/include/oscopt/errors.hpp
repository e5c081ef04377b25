#pragma once

#include <stdexcept>
#include <string>

namespace oscopt {

/// Bad input: malformed graph, out-of-range parameter, unparsable file.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact oracle was asked for more work than its budget allows.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oscopt
