#ifndef HHPAINLEVE_ERRORS_HPP
#define HHPAINLEVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hhp {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A variable occurring in a polynomial had no numeric value assigned.
class MissingAssignment : public Error {
 public:
  using Error::Error;
};

// A variable raised to a negative power was assigned zero.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Phase point on the x2 = 0 singular set with alpha != 0, or a non-finite state.
class SingularState : public Error {
 public:
  using Error::Error;
};

// Adaptive integration could not make progress above the minimum step.
class StepSizeUnderflow : public Error {
 public:
  using Error::Error;
};

// Malformed configuration or argument (bad path, non-positive tolerance, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace hhp

#endif  // HHPAINLEVE_ERRORS_HPP
