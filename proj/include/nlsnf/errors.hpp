#pragma once

#include <stdexcept>
#include <string>

namespace nlsnf {

// Base of every error raised by the toolkit. Validation errors (bad input,
// violated preconditions) and numerical failures are kept apart so that the
// command-line front end can map them to different exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

// Fields with different truncation orders were combined.
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A wavenumber lies outside the truncation window [-K, K].
class RangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A grid is too coarse for the requested transform.
class AliasingError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// |c| lies on the excluded set pi*Z.
class ExcludedAmplitudeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// The input field is not on the required real subspace.
class RealityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// NaN or Inf appeared during time integration.
class BlowUpError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace nlsnf
