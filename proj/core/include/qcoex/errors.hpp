#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcoex {

namespace detail {
// Compact number for messages: 1e-10 stays 1e-10, 0.2 stays 0.2.
inline std::string num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}
}  // namespace detail

/// Base class of every exception thrown by qcoex.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the mathematical domain of the operation
/// (non-positive wavelength, negative power, unordered table, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A query falls outside the sampled range of a measured profile.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied to the wrong propagation geometry.
class MisuseError : public Error {
 public:
  using Error::Error;
};

/// Numerical quadrature did not reach its tolerance within the refinement limit.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (CSV or JSON syntax, missing columns).
class ParseError : public Error {
 public:
  using Error::Error;
};

struct Issue {
  std::string field;
  std::string message;
};

/// Aggregates every problem found while validating a scenario.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Issue> issues)
      : Error(summarize(issues)), issues_(std::move(issues)) {}

  const std::vector<Issue>& issues() const noexcept { return issues_; }

 private:
  static std::string summarize(const std::vector<Issue>& issues) {
    std::string text = "scenario validation failed";
    for (const auto& issue : issues) {
      text += "\n  " + issue.field + ": " + issue.message;
    }
    return text;
  }

  std::vector<Issue> issues_;
};

}  // namespace qcoex
