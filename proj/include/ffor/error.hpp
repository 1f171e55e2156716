#pragma once

#include <stdexcept>
#include <string>

namespace ffor {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in prime field") {}
};

// Operands live in different rings (different prime, variables, order or
// quotient ideal).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace ffor
