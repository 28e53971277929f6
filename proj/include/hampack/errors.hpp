#pragma once

#include <stdexcept>
#include <string>

namespace hampack {

/// Base of every error raised by the library. `exit_code()` is the process
/// status the CLI reports for it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 4; }
};

/// Malformed text input (edge lists, arc lists, rationals).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int exit_code() const noexcept override { return 2; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Instance exceeds the size an exact routine is allowed to handle.
class CapacityError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

/// Invalid arguments: out-of-range vertices, overlapping sets, bad parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the domain where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two edge sets that were required to be disjoint share an edge.
class DisjointnessError : public Error {
 public:
  using Error::Error;
};

/// A requested object (factor, etc.) does not exist.
class ExistenceError : public Error {
 public:
  using Error::Error;
};

/// An internal post-condition audit failed. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 5; }
};

}  // namespace hampack
