#pragma once

#include <functional>
#include <optional>

#include "gdqm/errors.hpp"

namespace gdqm {

struct QuadratureSpec {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  /// Upper truncation of the semi-infinite range; the remainder is handled by
  /// a tail estimate.
  double tail_cutoff = 1e4;
  int panel_budget = 400000;

  void validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0)) throw ValidationError("QuadratureSpec: tolerances must be positive");
    if (!(tail_cutoff > 0)) throw ValidationError("QuadratureSpec: tail_cutoff must be positive");
    if (panel_budget < 1) throw ValidationError("QuadratureSpec: panel_budget must be positive");
  }
};

/// Analytic knowledge about the remainder beyond the cutoff: an estimated
/// value plus a rigorous bound on its error.
struct TailEstimate {
  double value = 0.0;
  double bound = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels_used = 0;
};

/// Adaptive Gauss-Kronrod 15(7) integration of f over (0, inf), truncated at
/// spec.tail_cutoff. If no tail estimate is supplied, a decay-envelope bound
/// is sampled near the cutoff. Throws QuadratureBudgetExceeded (carrying the
/// partial estimate) when the panel budget runs out before the tolerances are
/// met.
QuadratureResult integrate_semiinfinite_full(
    const std::function<double(double)>& f, const QuadratureSpec& spec,
    const std::optional<std::function<TailEstimate(double)>>& tail = std::nullopt);

/// Value-only convenience wrapper.
double integrate_semiinfinite(
    const std::function<double(double)>& f, const QuadratureSpec& spec,
    const std::optional<std::function<TailEstimate(double)>>& tail = std::nullopt);

/// Adaptive Gauss-Kronrod on a finite interval (building block, also used by
/// the finite pieces of experiment harnesses).
QuadratureResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureSpec& spec);

}  // namespace gdqm
