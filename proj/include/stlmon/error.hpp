#pragma once

#include <stdexcept>
#include <string>

namespace stlmon {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed DSL text. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// A temporal interval with a < 0 or a > b (or a non-finite bound).
class IntervalError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid formula (empty names, NaN thresholds, name clashes).
class InvalidFormula : public Error {
 public:
  using Error::Error;
};

/// A push timestamp that does not strictly increase.
class NonMonotonicTimestamp : public Error {
 public:
  NonMonotonicTimestamp(std::string signal, double previous, double offered);

  const std::string& signal() const noexcept { return signal_; }
  double previous() const noexcept { return previous_; }
  double offered() const noexcept { return offered_; }

 private:
  std::string signal_;
  double previous_;
  double offered_;
};

class EmptyWindow : public Error {
 public:
  EmptyWindow() : Error("sliding window is empty") {}
};

/// The trace does not extend far enough to evaluate the formula at a time.
class InsufficientTrace : public Error {
 public:
  using Error::Error;
};

/// An evaluation time that is not a point of the evaluation grid.
class NotOnGrid : public Error {
 public:
  using Error::Error;
};

/// A `$NAME` threshold with no binding in the variable context.
class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(std::string name)
      : Error("unbound variable '$" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace stlmon
