#pragma once

#include <stdexcept>
#include <string>

namespace lottery {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not line up (matrix/vector/mask dimensions).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the domain where the operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Problem size exceeds what an exact enumeration can hold in memory.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed input files or command-line values.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An iterative method ran out of iterations.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, double last_estimate)
      : Error(msg), last_estimate_(last_estimate) {}

  double last_estimate() const noexcept { return last_estimate_; }

 private:
  double last_estimate_;
};

}  // namespace lottery
