#pragma once

#include <stdexcept>
#include <string>

namespace gramlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (e.g. theta below t = 7).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Violated precondition of an operation (bad order, inverted range, parameter window).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The requested accuracy is out of reach in binary64.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Work or memory ceiling exceeded (sieve limit, brute-force limit).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Zero counting could not be reconciled with N(t) for the requested range.
class UncertifiedRange : public Error {
 public:
  using Error::Error;
};

class ChecksumMismatch : public Error {
 public:
  using Error::Error;
};

class VersionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace gramlab
