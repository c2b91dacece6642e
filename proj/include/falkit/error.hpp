#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace falkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Diagram text could not be read. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An argument lies outside the domain of an operation (w < 1, m < 7, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Face data or a nerve is not a consistent cell complex.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// The input is well formed but the operation does not cover it.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// The packing solver hit its sweep cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> residual_history)
      : Error(what), history_(std::move(residual_history)) {}

  /// Max angle residual recorded at regular sweep intervals.
  const std::vector<double>& residual_history() const noexcept { return history_; }

 private:
  std::vector<double> history_;
};

}  // namespace falkit
