#pragma once

#include <stdexcept>
#include <string>

namespace twk {

// Error taxonomy shared by every module. The CLI maps each family onto an
// exit code (see cli.hpp).

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's mathematical domain (zero argument, degenerate
/// form, singular matrix, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Valuation of 0 is +infinity; callers have to branch on zero themselves.
class ValuationOfZeroError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Hensel criterion violated.
class NoLiftError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed literal or command line.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A p-adic computation would need more digits than the operands carry.
/// Retrying with a larger precision is expected to succeed.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a hard resource bound (e.g. Clifford algebra dimension).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant; never expected in a correct build.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace twk
