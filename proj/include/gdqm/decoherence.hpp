#pragma once

#include <vector>

#include "gdqm/errors.hpp"
#include "gdqm/quadrature.hpp"

namespace gdqm {

/// Uniform-density ball, Planck units (mass in Planck masses, radius in
/// Planck lengths).
struct BallParams {
  double mass = 1.0;
  double radius = 1.0;

  BallParams() = default;
  BallParams(double mass, double radius) : mass(mass), radius(radius) {
    if (!(mass > 0) || !(radius > 0)) throw ValidationError("BallParams: mass and radius must be positive");
  }
};

/// 9 M^2 / R^2, the Gaussian-regime coefficient.
double alpha(const BallParams& ball);

/// Exact decoherence exponent
///   D(a) = 216 M^2 int_0^inf (sin k - k cos k)^2 / k^7 * (1 - sinc(k a / R)) dk,
/// evaluated by adaptive quadrature with an analytic k^-5 envelope tail bound.
/// Results are cached per (a/R, tolerances); M enters only as a prefactor.
double dexp_exact(double a, const BallParams& ball, const QuadratureSpec& quad);

/// Gaussian asymptote alpha a^2 (a << R).
double dexp_gaussian(double a, const BallParams& ball);

/// Logarithmic asymptote 24 M^2 ln(a/R) (a >> R). Domain error for a <= 0.
double dexp_log(double a, const BallParams& ball);

/// Saturated variant max(0, 24 M^2 ln(a/R)) used when the log form has to
/// cover separations below the ball radius (kernel construction).
double dexp_log_saturated(double a, const BallParams& ball);

/// Regime dispatch: Gaussian for a/R <= 0.2, exact quadrature otherwise.
double dexp_auto(double a, const BallParams& ball, const QuadratureSpec& quad);

enum class DecoherenceMode { Exact, Gaussian, Logarithmic, Auto };

struct DecoherenceSpec {
  DecoherenceMode mode = DecoherenceMode::Auto;
  BallParams ball;
  QuadratureSpec quad;
};

/// Evaluates D(a) for the configured mode (Logarithmic uses the raw
/// asymptote and hence requires a > 0).
double dexp(const DecoherenceSpec& spec, double a);

/// Regime boundaries of the auto dispatch.
inline constexpr double kGaussianRegimeMax = 0.2;
inline constexpr double kLogRegimeMin = 20.0;

// -- N-body forms -------------------------------------------------------------

struct NBodyConfig {
  std::vector<double> masses;
  std::vector<double> radii;

  int count() const { return static_cast<int>(masses.size()); }
  double total_mass() const;
  void validate() const;
};

/// Gaussian-regime N-body exponent for balls of equal radius R:
///   D = 9 (M_total^2 / R^2) (x_cm - x'_cm)^2
/// with mass-weighted centres of mass. Equal-radius configurations only.
double dexp_nbody_gaussian(const NBodyConfig& cfg, const std::vector<double>& x,
                           const std::vector<double>& xp);

/// Logarithmic-regime N-body exponent,
///   D = 12 sum_{I,J} M_I M_J ln( |x'_I - x_J| |x_I - x'_J| /
///                                (|x_I - x_J| |x'_I - x'_J|) ),
/// every distance floored at sqrt(R_I R_J) (for I = J this reproduces the
/// R_I^2 replacement of the diagonal denominators). Vanishes when x = x'.
/// Distinct balls at coincident positions within one configuration raise
/// SingularConfiguration.
double dexp_nbody_log(const NBodyConfig& cfg, const std::vector<double>& x,
                      const std::vector<double>& xp);

}  // namespace gdqm
