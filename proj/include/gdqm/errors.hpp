#pragma once

#include <stdexcept>
#include <string>

namespace gdqm {

/// Invalid arguments or configuration (maps to CLI exit code 1).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure at run time (maps to CLI exit code 2).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive quadrature ran out of panels. Carries the partial estimate.
class QuadratureBudgetExceeded : public NumericalError {
 public:
  QuadratureBudgetExceeded(const std::string& what, double partial, double error_estimate)
      : NumericalError(what), partial(partial), error_estimate(error_estimate) {}
  double partial;
  double error_estimate;
};

class PropagationUnstable : public NumericalError {
 public:
  explicit PropagationUnstable(const std::string& what) : NumericalError(what) {}
};

class SingularConfiguration : public ValidationError {
 public:
  explicit SingularConfiguration(const std::string& what) : ValidationError(what) {}
};

class InstanceTooLarge : public ValidationError {
 public:
  explicit InstanceTooLarge(const std::string& what) : ValidationError(what) {}
};

}  // namespace gdqm
