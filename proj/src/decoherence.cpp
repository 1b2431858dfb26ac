#include "gdqm/decoherence.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace gdqm {

double alpha(const BallParams& ball) {
  return 9.0 * ball.mass * ball.mass / (ball.radius * ball.radius);
}

namespace {

// (sin k - k cos k)^2 / k^7, series-protected near 0 where the numerator is
// (k^3/3)^2 (1 + O(k^2)).
double ball_form_factor(double k) {
  if (k < 5e-2) {
    const double k2 = k * k;
    const double s = (1.0 / 3.0) * (1.0 - k2 / 10.0 + k2 * k2 / 280.0);
    return s * s / k;
  }
  const double num = std::sin(k) - k * std::cos(k);
  return num * num / std::pow(k, 7);
}

double one_minus_sinc(double y) {
  if (std::abs(y) < 1e-2) {
    const double y2 = y * y;
    return y2 / 6.0 * (1.0 - y2 / 20.0 * (1.0 - y2 / 42.0));
  }
  return 1.0 - std::sin(y) / y;
}

// Dimensionless profile F(u) = int_0^inf g(k) (1 - sinc(k u)) dk, so that
// D(a) = 216 M^2 F(a/R). abs_tol is already scaled to the profile.
double d_profile(double u, const QuadratureSpec& quad) {
  struct Key {
    double u, abs_tol, rel_tol;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      auto h = std::hash<double>{};
      return h(k.u) ^ (h(k.abs_tol) << 1) ^ (h(k.rel_tol) << 2);
    }
  };
  static std::unordered_map<Key, double, KeyHash> cache;
  static std::shared_mutex cache_mutex;

  const Key key{u, quad.abs_tol, quad.rel_tol};
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  auto integrand = [u](double k) { return ball_form_factor(k) * one_minus_sinc(k * u); };
  // Envelope (1+k)^2 / k^7 * 2 beyond the cutoff.
  auto tail = [](double t) {
    const double b = 2.0 * (1.0 / (4.0 * std::pow(t, 4)) + 2.0 / (5.0 * std::pow(t, 5)) +
                            1.0 / (6.0 * std::pow(t, 6)));
    return TailEstimate{0.0, b};
  };
  const double value = integrate_semiinfinite(integrand, quad, tail);

  std::unique_lock lock(cache_mutex);
  cache.emplace(key, value);
  return value;
}

}  // namespace

double dexp_exact(double a, const BallParams& ball, const QuadratureSpec& quad) {
  if (a < 0) throw ValidationError("dexp_exact: separation must be nonnegative");
  if (a == 0.0) return 0.0;
  const double prefactor = 216.0 * ball.mass * ball.mass;
  QuadratureSpec inner = quad;
  inner.abs_tol = quad.abs_tol / prefactor;
  return prefactor * d_profile(a / ball.radius, inner);
}

double dexp_gaussian(double a, const BallParams& ball) {
  if (a < 0) throw ValidationError("dexp_gaussian: separation must be nonnegative");
  return alpha(ball) * a * a;
}

double dexp_log(double a, const BallParams& ball) {
  if (!(a > 0)) throw ValidationError("dexp_log: separation must be positive");
  return 24.0 * ball.mass * ball.mass * std::log(a / ball.radius);
}

double dexp_log_saturated(double a, const BallParams& ball) {
  if (a < 0) throw ValidationError("dexp_log_saturated: separation must be nonnegative");
  if (a <= ball.radius) return 0.0;
  return dexp_log(a, ball);
}

double dexp_auto(double a, const BallParams& ball, const QuadratureSpec& quad) {
  if (a < 0) throw ValidationError("dexp_auto: separation must be nonnegative");
  if (a == 0.0) return 0.0;
  if (a / ball.radius <= kGaussianRegimeMax) return dexp_gaussian(a, ball);
  return dexp_exact(a, ball, quad);
}

double dexp(const DecoherenceSpec& spec, double a) {
  switch (spec.mode) {
    case DecoherenceMode::Exact:
      return dexp_exact(a, spec.ball, spec.quad);
    case DecoherenceMode::Gaussian:
      return dexp_gaussian(a, spec.ball);
    case DecoherenceMode::Logarithmic:
      return dexp_log(a, spec.ball);
    case DecoherenceMode::Auto:
      return dexp_auto(a, spec.ball, spec.quad);
  }
  throw ValidationError("dexp: unknown mode");
}

double NBodyConfig::total_mass() const {
  double m = 0.0;
  for (double mi : masses) m += mi;
  return m;
}

void NBodyConfig::validate() const {
  if (masses.empty() || masses.size() != radii.size()) {
    throw ValidationError("NBodyConfig: masses and radii must be non-empty and equal length");
  }
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (!(masses[i] > 0) || !(radii[i] > 0)) {
      throw ValidationError("NBodyConfig: masses and radii must be positive");
    }
  }
}

double dexp_nbody_gaussian(const NBodyConfig& cfg, const std::vector<double>& x,
                           const std::vector<double>& xp) {
  cfg.validate();
  const int n = cfg.count();
  if (static_cast<int>(x.size()) != n || static_cast<int>(xp.size()) != n) {
    throw ValidationError("dexp_nbody_gaussian: position lists must match the configuration");
  }
  const double r0 = cfg.radii[0];
  for (double r : cfg.radii) {
    if (r != r0) {
      throw ValidationError("dexp_nbody_gaussian: Gaussian N-body form needs equal radii");
    }
  }
  const double mtot = cfg.total_mass();
  double cm = 0.0, cmp = 0.0;
  for (int i = 0; i < n; ++i) {
    cm += cfg.masses[i] * x[i];
    cmp += cfg.masses[i] * xp[i];
  }
  const double shift = (cm - cmp) / mtot;
  return 9.0 * mtot * mtot / (r0 * r0) * shift * shift;
}

double dexp_nbody_log(const NBodyConfig& cfg, const std::vector<double>& x,
                      const std::vector<double>& xp) {
  cfg.validate();
  const int n = cfg.count();
  if (static_cast<int>(x.size()) != n || static_cast<int>(xp.size()) != n) {
    throw ValidationError("dexp_nbody_log: position lists must match the configuration");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (x[i] == x[j] || xp[i] == xp[j]) {
        throw SingularConfiguration("dexp_nbody_log: distinct balls at coincident positions");
      }
    }
  }
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double floor_ij = std::sqrt(cfg.radii[i] * cfg.radii[j]);
      const auto sep = [floor_ij](double p, double q) {
        return std::max(std::abs(p - q), floor_ij);
      };
      const double num = sep(xp[i], x[j]) * sep(x[i], xp[j]);
      const double den = sep(x[i], x[j]) * sep(xp[i], xp[j]);
      d += 12.0 * cfg.masses[i] * cfg.masses[j] * std::log(num / den);
    }
  }
  return d;
}

}  // namespace gdqm
