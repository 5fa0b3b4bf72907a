#pragma once

#include <stdexcept>
#include <string>

namespace polyberg {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Valid input that this library deliberately does not handle.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Frequency or matrix index outside the stored range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A structural precondition on generator matrices failed.
/// `condition` names the failed hypothesis, `row`/`col`/`which` locate the entry.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string condition, int which, int row, int col, const std::string& what)
      : std::runtime_error(what), condition_(std::move(condition)), which_(which), row_(row), col_(col) {}

  const std::string& condition() const noexcept { return condition_; }
  int which() const noexcept { return which_; }
  int row() const noexcept { return row_; }
  int col() const noexcept { return col_; }

 private:
  std::string condition_;
  int which_;
  int row_;
  int col_;
};

/// Two pure states that cannot be told apart by the requested construction.
class NotSeparableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (symbol JSON, state descriptors, sequence files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polyberg
