#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zgap {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input data failed a structural check (ordering, size, coverage).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}

  /// 1-based line of the offending input, 0 when not tied to a file line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Unparseable input text.
class FormatError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace zgap
