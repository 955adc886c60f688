#pragma once

#include <stdexcept>
#include <string>

namespace matchforge {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed SMPI, matching, program or answer-set text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Preference data violating the instance invariants.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// A set of pairs that is not a matching of the instance.
class InvalidMatching : public Error {
 public:
  using Error::Error;
};

/// An ordering or cost query outside the domain where it is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exponential routine refused an input above its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A self-check failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace matchforge
