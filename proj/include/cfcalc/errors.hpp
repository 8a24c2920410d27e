#pragma once

#include <stdexcept>
#include <string>

namespace cfcalc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: duplicate vertices, non-closed subsets, ambient mismatch.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

/// An operation was asked outside its domain of validity (e.g. the dimension
/// formula on a singular stratum).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Scene text that is not well-formed JSON.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error("syntax error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Scene text that parses but violates a structural invariant. The path names
/// the offending element, e.g. `strata[1].Y`.
class SemanticError : public Error {
 public:
  SemanticError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace cfcalc
