#pragma once

#include <stdexcept>
#include <string>

namespace ecodyn {

/// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: parameters out of range, malformed data, unmet preconditions.
/// The CLI maps these to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The inputs were acceptable but the computation could not produce a
/// trustworthy answer (pole, blow-up, non-convergence, near-singular system).
/// The CLI maps these to exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class StructuralError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A configuration the current version deliberately does not handle.
class UnsupportedError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PoleError : public NumericalError {
 public:
  PoleError(const std::string& what, double pole)
      : NumericalError(what), pole_(pole) {}
  double pole() const noexcept { return pole_; }

 private:
  double pole_;
};

class RepeatedRootError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ResolutionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An internal cross-check between two independent computations disagreed.
class ConsistencyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SpectrumProximityError : public NumericalError {
 public:
  SpectrumProximityError(const std::string& what, double nearest)
      : NumericalError(what), nearest_(nearest) {}
  /// Nearest characteristic number (real part if complex).
  double nearest() const noexcept { return nearest_; }

 private:
  double nearest_;
};

class InfeasibleError : public NumericalError {
 public:
  InfeasibleError(const std::string& what, double unclamped)
      : NumericalError(what), unclamped_(unclamped) {}
  double unclamped() const noexcept { return unclamped_; }

 private:
  double unclamped_;
};

}  // namespace ecodyn
