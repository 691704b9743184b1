#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greengb {

/// Malformed textual input (polynomial expression or presentation file).
/// Carries a 1-based line and column of the offending token where known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Adding a tagged polynomial to an untagged one (or mismatched tag sides).
class TagMismatchError : public std::runtime_error {
 public:
  explicit TagMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// Multiplying on a side that the tag blocks.
class IllegalMultiplicationError : public std::runtime_error {
 public:
  explicit IllegalMultiplicationError(const std::string& what) : std::runtime_error(what) {}
};

/// Leading-term access on the zero polynomial.
class ZeroPolynomialError : public std::runtime_error {
 public:
  explicit ZeroPolynomialError(const std::string& what) : std::runtime_error(what) {}
};

/// A mixed system that violates its construction invariants.
class InvalidSystemError : public std::runtime_error {
 public:
  explicit InvalidSystemError(const std::string& what) : std::runtime_error(what) {}
};

/// Comparing one-sided ideal bases of different sides.
class SideMismatchError : public std::runtime_error {
 public:
  explicit SideMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation that requires a completed system was given a partial one.
class IncompleteSystemError : public std::runtime_error {
 public:
  explicit IncompleteSystemError(const std::string& what) : std::runtime_error(what) {}
};

/// A reduction exceeded the caller-imposed step budget.
class StepLimitError : public std::runtime_error {
 public:
  explicit StepLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace greengb
