#include "gdqm/states.hpp"

#include <cmath>
#include <numbers>

#include "gdqm/eigenh.hpp"
#include "gdqm/simd.hpp"

namespace gdqm {

namespace {

void check_parity_tag(const Grid1D& grid, const Eigen::VectorXcd& amp, Parity parity) {
  if (parity == Parity::None) return;
  if (!grid.symmetric()) {
    throw ValidationError("parity tag requires a symmetric grid with odd point count");
  }
  const double sign = parity == Parity::Even ? 1.0 : -1.0;
  const int n = static_cast<int>(amp.size());
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(amp(i) - sign * amp(n - 1 - i)));
  }
  if (worst > 1e-10) {
    throw ValidationError("parity tag does not hold on the grid");
  }
}

}  // namespace

double WaveFunction::norm() const {
  return std::sqrt(simd::norm2(amp.data(), amp.size()) * dx());
}

double WaveFunction::moment(int k) const {
  double s = 0.0;
  for (int i = 0; i < n(); ++i) {
    s += std::pow(grid.x(i), k) * std::norm(amp(i));
  }
  return s * dx();
}

double WaveFunction::var_x() const {
  const double m1 = mean_x();
  return x2() - m1 * m1;
}

void WaveFunction::normalize() {
  const double nrm = norm();
  if (!(nrm > 0)) throw ValidationError("cannot normalize a zero wave function");
  amp /= nrm;
  check_parity_tag(grid, amp, parity);
}

WaveFunction make_wavefunction(const Grid1D& grid, Eigen::VectorXcd amplitudes, Parity parity) {
  if (static_cast<int>(amplitudes.size()) != grid.n) {
    throw ValidationError("make_wavefunction: amplitude count does not match grid");
  }
  WaveFunction psi{grid, std::move(amplitudes), parity};
  psi.normalize();
  return psi;
}

cplx braket(const WaveFunction& a, const WaveFunction& b) {
  if (!(a.grid == b.grid)) throw ValidationError("braket: grids differ");
  return simd::cdot(a.amp.data(), b.amp.data(), a.amp.size()) * a.dx();
}

WaveFunction gaussian_state(const Grid1D& grid, double sigma, double center, double momentum,
                            double chirp) {
  if (!(sigma > 0)) throw ValidationError("gaussian_state: sigma must be positive");
  Eigen::VectorXcd amp(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double u = grid.x(i) - center;
    amp(i) = std::exp(cplx(-u * u / (4.0 * sigma * sigma), momentum * grid.x(i) + chirp * u * u));
  }
  return make_wavefunction(grid, std::move(amp));
}

WaveFunction gaussian_state_c(const Grid1D& grid, cplx c) {
  if (!(c.real() > 0)) throw ValidationError("gaussian_state_c: Re c must be positive");
  Eigen::VectorXcd amp(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    amp(i) = std::exp(-c * x * x);
  }
  return make_wavefunction(grid, std::move(amp));
}

WaveFunction box_mode(const Grid1D& grid, int m) {
  if (m < 1) throw ValidationError("box_mode: mode index starts at 1");
  if (!grid.symmetric()) throw ValidationError("box_mode: needs a symmetric grid");
  const double delta = grid.x_max;
  Eigen::VectorXcd amp(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double arg = m * std::numbers::pi * grid.x(i) / (2.0 * delta);
    amp(i) = (m % 2 == 1) ? std::cos(arg) : std::sin(arg);
  }
  return make_wavefunction(grid, std::move(amp), m % 2 == 1 ? Parity::Even : Parity::Odd);
}

WaveFunction double_peak_state(const Grid1D& grid, double separation, double sigma) {
  if (!(sigma > 0) || !(separation > 0)) {
    throw ValidationError("double_peak_state: separation and sigma must be positive");
  }
  if (!grid.symmetric()) throw ValidationError("double_peak_state: needs a symmetric grid");
  const double b = separation / 2.0;
  Eigen::VectorXcd amp(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    const double left = (x + b) / (2.0 * sigma);
    const double right = (x - b) / (2.0 * sigma);
    amp(i) = std::exp(-left * left) + std::exp(-right * right);
  }
  // Enforce exact grid-level symmetry against rounding in x.
  for (int i = 0; i < grid.n / 2; ++i) {
    const cplx avg = 0.5 * (amp(i) + amp(grid.n - 1 - i));
    amp(i) = avg;
    amp(grid.n - 1 - i) = avg;
  }
  return make_wavefunction(grid, std::move(amp), Parity::Even);
}

WaveFunction point_cat_state(const Grid1D& grid, cplx c1, cplx c2, double separation) {
  if (!grid.symmetric()) throw ValidationError("point_cat_state: needs a symmetric grid");
  const double b = separation / 2.0;
  auto nearest = [&grid](double target) {
    return static_cast<int>(std::lround((target - grid.x_min) / grid.dx()));
  };
  const int i1 = nearest(-b);
  const int i2 = nearest(b);
  if (i1 == i2) throw ValidationError("point_cat_state: separation below grid resolution");
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(grid.n);
  amp(i1) = c1;
  amp(i2) = c2;
  return make_wavefunction(grid, std::move(amp));
}

// -- density kernels ----------------------------------------------------------

double DensityKernel::trace_weight() const {
  double w = 1.0;
  for (const auto& g : grids) w *= g.dx();
  return w;
}

double DensityKernel::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim(); ++i) t += k(i, i);
  return t.real() * trace_weight();
}

double DensityKernel::purity() const {
  // tr rho^2 = sum_ij |k_ij|^2 w^2 for a Hermitian kernel.
  const double w = trace_weight();
  return simd::norm2(k.data(), static_cast<std::size_t>(k.size())) * w * w;
}

double DensityKernel::min_eigenvalue() const {
  return hermitian_eigenvalues(op()).minCoeff();
}

Eigen::VectorXd DensityKernel::diagonal() const {
  Eigen::VectorXd d(dim());
  for (int i = 0; i < dim(); ++i) d(i) = k(i, i).real();
  return d;
}

namespace {

// rho0 Hadamard a real symmetric suppression table given by offset:
// w(i, j) = by_offset[|i-j|]; by_offset[0] must be exactly 1.
DensityKernel hadamard_by_offset(const WaveFunction& psi, const std::vector<double>& by_offset) {
  const int n = psi.n();
  Eigen::MatrixXd w(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      w(i, j) = by_offset[static_cast<std::size_t>(std::abs(i - j))];
    }
  }
  Eigen::MatrixXcd outer = psi.amp * psi.amp.adjoint();
  DensityKernel rho{{psi.grid}, Eigen::MatrixXcd(n, n)};
  simd::scale_by_real(rho.k.data(), outer.data(), w.data(),
                      static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  return rho;
}

}  // namespace

DensityKernel build_rho_gauss(const WaveFunction& psi, double kappa) {
  if (kappa < 0) throw ValidationError("build_rho_gauss: kappa must be nonnegative");
  const int n = psi.n();
  const double dx = psi.dx();
  std::vector<double> by_offset(n);
  for (int m = 0; m < n; ++m) {
    const double a = m * dx;
    by_offset[m] = std::exp(-kappa * a * a);
  }
  return hadamard_by_offset(psi, by_offset);
}

DensityKernel build_rho_pure(const WaveFunction& psi) { return build_rho_gauss(psi, 0.0); }

DensityKernel build_rho_ball(const WaveFunction& psi, const BallParams& ball,
                             const DecoherenceSpec& dspec) {
  const int n = psi.n();
  const double dx = psi.dx();
  const double max_sep = (n - 1) * dx;

  DecoherenceMode mode = dspec.mode;
  if (mode == DecoherenceMode::Auto) {
    // One regime per kernel: a consistent D form keeps the suppression table
    // a positive-definite function of the separation.
    mode = (max_sep / ball.radius <= kGaussianRegimeMax) ? DecoherenceMode::Gaussian
                                                         : DecoherenceMode::Exact;
  }

  std::vector<double> by_offset(n);
  by_offset[0] = 1.0;
  for (int m = 1; m < n; ++m) {
    const double a = m * dx;
    double d = 0.0;
    switch (mode) {
      case DecoherenceMode::Exact:
        d = dexp_exact(a, ball, dspec.quad);
        break;
      case DecoherenceMode::Gaussian:
        d = dexp_gaussian(a, ball);
        break;
      case DecoherenceMode::Logarithmic:
        d = dexp_log_saturated(a, ball);
        break;
      case DecoherenceMode::Auto:
        break;  // resolved above
    }
    by_offset[m] = std::exp(-d);
  }
  return hadamard_by_offset(psi, by_offset);
}

double NBodyState::weight() const {
  double w = 1.0;
  for (const auto& g : grids) w *= g.dx();
  return w;
}

std::vector<double> NBodyState::config(int q) const {
  std::vector<double> xs(grids.size());
  for (int b = static_cast<int>(grids.size()) - 1; b >= 0; --b) {
    xs[b] = grids[b].x(q % grids[b].n);
    q /= grids[b].n;
  }
  return xs;
}

NBodyState tensor_product(const std::vector<WaveFunction>& factors) {
  if (factors.empty()) throw ValidationError("tensor_product: no factors");
  NBodyState state;
  state.amp = Eigen::VectorXcd::Ones(1);
  for (const auto& f : factors) {
    state.grids.push_back(f.grid);
    Eigen::VectorXcd next(state.amp.size() * f.amp.size());
    for (int i = 0; i < state.amp.size(); ++i) {
      next.segment(i * f.amp.size(), f.amp.size()) = state.amp(i) * f.amp;
    }
    state.amp = std::move(next);
  }
  return state;
}

DensityKernel build_rho_nbody(const NBodyState& psi,
                              const std::function<double(const std::vector<double>&,
                                                         const std::vector<double>&)>& d) {
  const int dim = psi.dim();
  if (dim > kMaxKernelDim) {
    throw InstanceTooLarge("build_rho_nbody: kernel dimension " + std::to_string(dim) +
                           " exceeds cap " + std::to_string(kMaxKernelDim));
  }
  std::vector<std::vector<double>> configs(dim);
  for (int q = 0; q < dim; ++q) configs[q] = psi.config(q);

  DensityKernel rho{psi.grids, Eigen::MatrixXcd(dim, dim)};
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i <= j; ++i) {
      const cplx v = psi.amp(i) * std::conj(psi.amp(j)) * std::exp(-d(configs[i], configs[j]));
      rho.k(i, j) = v;
      rho.k(j, i) = std::conj(v);
    }
  }
  return rho;
}

DensityKernel first_order_rho(const WaveFunction& psi, double kappa) {
  const int n = psi.n();
  const double dx = psi.dx();
  std::vector<double> by_offset(n);
  for (int m = 0; m < n; ++m) {
    const double a = m * dx;
    by_offset[m] = 1.0 - kappa * a * a;
  }
  return hadamard_by_offset(psi, by_offset);
}

// -- observables --------------------------------------------------------------

ObservableKernel ObservableKernel::position_fn(Eigen::VectorXd values) {
  ObservableKernel o;
  o.kind = Kind::PositionFn;
  o.f = std::move(values);
  return o;
}

ObservableKernel ObservableKernel::position() {
  ObservableKernel o;
  o.kind = Kind::PositionFn;
  return o;  // empty f means "use the grid coordinates"
}

ObservableKernel ObservableKernel::momentum() {
  ObservableKernel o;
  o.kind = Kind::Momentum;
  return o;
}

ObservableKernel ObservableKernel::momentum_squared() {
  ObservableKernel o;
  o.kind = Kind::MomentumSquared;
  return o;
}

ObservableKernel ObservableKernel::parity() {
  ObservableKernel o;
  o.kind = Kind::Parity;
  return o;
}

ObservableKernel ObservableKernel::custom(Eigen::MatrixXcd a) {
  ObservableKernel o;
  o.kind = Kind::Custom;
  o.kernel = std::move(a);
  return o;
}

Eigen::MatrixXcd ObservableKernel::to_operator(const Grid1D& grid) const {
  const int n = grid.n;
  const double dx = grid.dx();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  switch (kind) {
    case Kind::PositionFn: {
      if (f.size() != 0 && f.size() != n) {
        throw ValidationError("position_fn: sample count does not match grid");
      }
      for (int i = 0; i < n; ++i) a(i, i) = f.size() ? f(i) : grid.x(i);
      break;
    }
    case Kind::Momentum: {
      const cplx c(0.0, -1.0 / (2.0 * dx));
      for (int i = 0; i + 1 < n; ++i) {
        a(i, i + 1) = c;
        a(i + 1, i) = -c;
      }
      break;
    }
    case Kind::MomentumSquared: {
      // p^2 = -d^2/dx^2, fourth-order five-point stencil, hard walls.
      const double d0 = 30.0 / (12.0 * dx * dx);
      const double d1 = -16.0 / (12.0 * dx * dx);
      const double d2 = 1.0 / (12.0 * dx * dx);
      for (int i = 0; i < n; ++i) {
        a(i, i) = d0;
        if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = d1;
        if (i + 2 < n) a(i, i + 2) = a(i + 2, i) = d2;
      }
      break;
    }
    case Kind::Parity: {
      if (!grid.symmetric()) throw ValidationError("parity operator needs a symmetric grid");
      for (int i = 0; i < n; ++i) a(i, n - 1 - i) = 1.0;
      break;
    }
    case Kind::Custom: {
      if (kernel.rows() != n || kernel.cols() != n) {
        throw ValidationError("custom kernel does not match grid");
      }
      a = kernel * dx;
      break;
    }
  }
  return a;
}

double expect(const DensityKernel& rho, const ObservableKernel& obs) {
  const int n = rho.dim();
  const double w = rho.trace_weight();

  if (obs.kind == ObservableKernel::Kind::PositionFn && rho.bodies() == 1) {
    // Diagonal contraction; exactly the same arithmetic path for rho and
    // rho0, so position statistics cannot tell them apart.
    if (obs.f.size() != 0 && obs.f.size() != n) {
      throw ValidationError("expect: position samples do not match kernel");
    }
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      s += (obs.f.size() ? obs.f(i) : rho.grids[0].x(i)) * rho.k(i, i).real();
    }
    return s * w;
  }

  Eigen::MatrixXcd a;
  if (obs.kind == ObservableKernel::Kind::Custom) {
    if (obs.kernel.rows() != n || obs.kernel.cols() != n) {
      throw ValidationError("expect: custom kernel dimension mismatch");
    }
    a = obs.kernel * w;
  } else {
    if (rho.bodies() != 1) {
      throw ValidationError("expect: built-in observables act on one-body kernels");
    }
    a = obs.to_operator(rho.grids[0]);
  }
  if (a.rows() != n) throw ValidationError("expect: observable dimension mismatch");
  // tr(rho A) = sum_ij rho_op(i,j) A(j,i); contract against the transpose so
  // both matrices stream in the same storage order.
  Eigen::MatrixXcd at = a.transpose();
  const cplx t = simd::dot(rho.k.data(), at.data(), static_cast<std::size_t>(n) * n) * w;
  if (std::abs(t.imag()) > 1e-8 * std::max(1.0, std::abs(t.real()))) {
    throw NumericalError("expect: non-negligible imaginary part for Hermitian observable");
  }
  return t.real();
}

double expect_parity(const DensityKernel& rho) {
  if (rho.bodies() != 1) throw ValidationError("expect_parity: one-body kernels only");
  if (!rho.grids[0].symmetric()) throw ValidationError("expect_parity: needs a symmetric grid");
  const int n = rho.dim();
  cplx s = 0.0;
  for (int i = 0; i < n; ++i) s += rho.k(n - 1 - i, i);
  return s.real() * rho.trace_weight();
}

double parity_first_order(const WaveFunction& psi, double kappa) {
  if (!psi.grid.symmetric()) throw ValidationError("parity_first_order: needs a symmetric grid");
  const int n = psi.n();
  // tr(rho0 P) and <psi| x^2 P |psi> by reflection contraction.
  cplx p0 = 0.0, x2p = 0.0;
  for (int i = 0; i < n; ++i) {
    const cplx v = psi.amp(n - 1 - i) * std::conj(psi.amp(i));
    p0 += v;
    x2p += psi.grid.x(i) * psi.grid.x(i) * v;
  }
  return (p0.real() - 4.0 * kappa * x2p.real()) * psi.dx();
}

double naive_p2_offset(int dim, double alpha_or_kappa) {
  if (dim != 1 && dim != 3) throw ValidationError("naive_p2_offset: dim must be 1 or 3");
  return 2.0 * dim * alpha_or_kappa;
}

UncertaintyReport uncertainty_report(const WaveFunction& psi, const BallParams& ball) {
  UncertaintyReport r;
  r.alpha = alpha(ball);
  r.dx2 = psi.var_x();

  DensityKernel rho0 = build_rho_pure(psi);
  const double p_mean = expect(rho0, ObservableKernel::momentum());
  const double p2 = expect(rho0, ObservableKernel::momentum_squared());
  r.dp2_wouldbe = p2 - p_mean * p_mean;
  r.dp2_physical = r.dp2_wouldbe + 2.0 * r.alpha;
  r.heisenberg_lhs = r.dx2 * r.dp2_physical;
  r.modified_rhs = 0.25 + 2.0 * r.alpha * r.dx2;
  r.lambda_max = 2.0 * std::numbers::pi * ball.radius / (3.0 * std::sqrt(6.0) * ball.mass);
  return r;
}

}  // namespace gdqm
