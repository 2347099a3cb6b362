#pragma once

#include <stdexcept>
#include <string>

namespace gim {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad file contents, out-of-range vertex, infeasible generator parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal postcondition failed. Always a bug in this library.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A search/solver budget was exceeded before an exact answer was reached.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace gim
