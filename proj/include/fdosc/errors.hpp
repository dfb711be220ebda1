#pragma once

#include <stdexcept>
#include <string>

namespace fdosc {

/// A function or operator could not be evaluated at the requested point.
class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Gamma-function argument sits on a pole (non-positive integer).
class PoleError : public EvaluationError {
 public:
  using EvaluationError::EvaluationError;
};

/// Polynomial parameters make a denominator Pochhammer vanish.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Model couplings outside the physically allowed range.
class CouplingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The spectral function f(E) used to normalise the su(1,1) generators is not positive.
class SpectralError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fdosc
