#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exact evaluation was requested for a quantity that is not rational.
class ExactnessError : public Error {
 public:
  using Error::Error;
};

/// A series representation was requested where it does not converge.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// The certified truncation error of a series exceeds the configured tolerance.
class TailBoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace qeuler
