#pragma once

#include <stdexcept>

namespace renyi {

// Error taxonomy shared across the library. The CLI maps these onto its
// exit-code contract (2 for usage-class errors, 3 for evaluation errors).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: shape mismatches, non-finite entries, bad schedules.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Input outside the mathematical domain of an operation, e.g. log of a
// non-positive spectrum or a non-invertible element where invertibility is
// required.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Parameter outside the supported range (alpha inside the guard band around 1,
// non-positive z, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The computation itself failed: eigensolver out of budget, trace with a
// non-negligible imaginary part, singular least-squares system.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

// Two independent evaluation routes of the same quantity disagreed beyond
// tolerance.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace renyi
