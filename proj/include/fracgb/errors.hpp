#pragma once

#include <stdexcept>
#include <string>

namespace fracgb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mixed moduli or mismatched ring arity.
class ArityError : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

class UnassignedVariableError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// The satisfiability promise of an input instance was violated.
class ContradictionError : public Error {
 public:
  using Error::Error;
};

class EmptyInstanceError : public Error {
 public:
  using Error::Error;
};

class TooLargeToEnumerateError : public Error {
 public:
  using Error::Error;
};

class EmptyAcceptableSetError : public Error {
 public:
  using Error::Error;
};

class InconsistentSystemError : public Error {
 public:
  using Error::Error;
};

/// Violation of an internal guarantee; always a bug signal.
class InternalError : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace fracgb
