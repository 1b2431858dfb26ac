#include "gdqm/dynamics.hpp"

#include <cmath>

#include "gdqm/simd.hpp"

namespace gdqm {

MasterEqSpec MasterEqSpec::mdm_gauss(double kappa, const HamiltonianSpec& h, double dt) {
  if (kappa < 0) throw ValidationError("mdm_gauss: kappa must be nonnegative");
  if (!(dt > 0)) throw ValidationError("mdm_gauss: dt must be positive");
  MasterEqSpec s;
  s.kind = Kind::MdmGauss;
  s.kappa = kappa;
  s.h = h;
  s.dt = dt;
  return s;
}

MasterEqSpec MasterEqSpec::blp(double c, const HamiltonianSpec& h, double dt) {
  if (c < 0) throw ValidationError("blp: c must be nonnegative");
  if (!(dt > 0)) throw ValidationError("blp: dt must be positive");
  MasterEqSpec s;
  s.kind = Kind::Blp;
  s.c = c;
  s.h = h;
  s.dt = dt;
  return s;
}

namespace {

struct RhsContext {
  Eigen::VectorXd hdiag;   // 2 kin + V
  double hoff = 0.0;       // -kin
  Eigen::VectorXd x;
  double inv2dx = 0.0;
  double kappa_over_m = 0.0;  // 2 kappa / M
  double c = 0.0;
  MasterEqSpec::Kind kind;
};

RhsContext make_context(const Grid1D& grid, const MasterEqSpec& spec) {
  RhsContext ctx;
  ctx.kind = spec.kind;
  const double dx = grid.dx();
  const double kin = 1.0 / (2.0 * spec.h.mass * dx * dx);
  const Eigen::VectorXd pot = spec.h.potential_on(grid);
  ctx.hdiag = pot.array() + 2.0 * kin;
  ctx.hoff = -kin;
  ctx.x.resize(grid.n);
  for (int i = 0; i < grid.n; ++i) ctx.x(i) = grid.x(i);
  ctx.inv2dx = 1.0 / (2.0 * dx);
  ctx.kappa_over_m = 2.0 * spec.kappa / spec.h.mass;
  ctx.c = spec.c;
  return ctx;
}

// out = -i [H, rho] - deco(rho), all band/elementwise operations.
void eval_rhs(const RhsContext& ctx, const Eigen::MatrixXcd& rho, Eigen::MatrixXcd& out) {
  const int n = static_cast<int>(rho.rows());
  const cplx mi(0.0, -1.0);

  auto at = [&rho, n](int i, int j) -> cplx {
    return (i >= 0 && i < n && j >= 0 && j < n) ? rho(i, j) : cplx(0.0, 0.0);
  };

  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      // [H, rho] with tridiagonal H
      cplx hr = ctx.hdiag(i) * rho(i, j) + ctx.hoff * (at(i - 1, j) + at(i + 1, j));
      cplx rh = rho(i, j) * ctx.hdiag(j) + ctx.hoff * (at(i, j - 1) + at(i, j + 1));
      cplx v = mi * (hr - rh);

      if (ctx.kind == MasterEqSpec::Kind::MdmGauss) {
        // [x, [p, rho]]: (x_i - x_j) times the p-commutator
        const cplx pr = cplx(0.0, -1.0) * (at(i + 1, j) - at(i - 1, j)) * ctx.inv2dx;
        const cplx rp = cplx(0.0, 1.0) * (at(i, j + 1) - at(i, j - 1)) * ctx.inv2dx;
        v -= ctx.kappa_over_m * (ctx.x(i) - ctx.x(j)) * (pr - rp);
      } else {
        const double d = ctx.x(i) - ctx.x(j);
        v -= ctx.c * d * d * rho(i, j);
      }
      out(i, j) = v;
    }
  }
}

}  // namespace

DensityKernel master_rhs(const DensityKernel& rho, const MasterEqSpec& spec) {
  if (rho.bodies() != 1) throw ValidationError("master_rhs: one-body kernels only");
  RhsContext ctx = make_context(rho.grids[0], spec);
  DensityKernel out{rho.grids, Eigen::MatrixXcd(rho.dim(), rho.dim())};
  eval_rhs(ctx, rho.k, out.k);
  return out;
}

MasterTrajectory integrate_master(const DensityKernel& rho0, const MasterEqSpec& spec, int steps,
                                  int snapshot_stride) {
  if (rho0.bodies() != 1) throw ValidationError("integrate_master: one-body kernels only");
  if (steps < 1) throw ValidationError("integrate_master: need at least one step");

  const Grid1D& grid = rho0.grids[0];
  const int n = rho0.dim();
  const std::size_t sz = static_cast<std::size_t>(n) * n;
  RhsContext ctx = make_context(grid, spec);

  DensityKernel cur = rho0;
  Eigen::MatrixXcd k1(n, n), k2(n, n), k3(n, n), k4(n, n), tmp(n, n);
  const double dt = spec.dt;
  const double trace0 = cur.trace();

  MasterTrajectory traj;
  auto record = [&](double t, const DensityKernel& rho, bool snap) {
    traj.times.push_back(t);
    traj.trace.push_back(rho.trace());
    traj.entropy_s1.push_back(1.0 - rho.purity());
    if (snap) {
      traj.snapshot_times.push_back(t);
      traj.snapshots.push_back(rho);
    }
  };
  record(0.0, cur, snapshot_stride > 0);

  for (int s = 1; s <= steps; ++s) {
    eval_rhs(ctx, cur.k, k1);
    tmp = cur.k;
    simd::axpy(tmp.data(), 0.5 * dt, k1.data(), sz);
    eval_rhs(ctx, tmp, k2);
    tmp = cur.k;
    simd::axpy(tmp.data(), 0.5 * dt, k2.data(), sz);
    eval_rhs(ctx, tmp, k3);
    tmp = cur.k;
    simd::axpy(tmp.data(), dt, k3.data(), sz);
    eval_rhs(ctx, tmp, k4);
    simd::rk4_combine(tmp.data(), cur.k.data(), k1.data(), k2.data(), k3.data(), k4.data(),
                      dt / 6.0, dt / 3.0, dt / 3.0, dt / 6.0, sz);
    // Hermitian symmetrization
    cur.k = 0.5 * (tmp + tmp.adjoint().eval());

    const double t = s * dt;
    const double tr = cur.trace();
    if (std::abs(tr - trace0) > 1e-4) {
      throw NumericalError("integrate_master: trace drift " + std::to_string(tr - trace0) +
                           " at t = " + std::to_string(t) + " (step " + std::to_string(s) +
                           ", dt = " + std::to_string(dt) + ")");
    }
    record(t, cur, snapshot_stride > 0 && (s % snapshot_stride == 0 || s == steps));
  }
  return traj;
}

EvolutionResult evolve_mdm(const WaveFunction& psi0, const HamiltonianSpec& h, double kappa,
                           const std::vector<double>& times, const PropagateOptions& opts,
                           bool keep_snapshots) {
  if (times.empty()) throw ValidationError("evolve_mdm: no sample times");
  if (times.front() < 0) throw ValidationError("evolve_mdm: sample times must be nonnegative");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (times[i] < times[i - 1]) throw ValidationError("evolve_mdm: times must be nondecreasing");
  }

  EvolutionResult res;
  WaveFunction cur = psi0;
  double t_prev = 0.0;
  for (double t : times) {
    if (t > t_prev) {
      cur = schrodinger_propagate(cur, h, t - t_prev, opts);
      t_prev = t;
    }
    DensityKernel rho = build_rho_gauss(cur, kappa);
    const Eigen::VectorXd eigs = hermitian_eigenvalues(rho.op());

    double s = 0.0;
    for (int i = 0; i < eigs.size(); ++i) {
      const double lam = eigs(i);
      if (lam < -1e-6) throw NumericalError("evolve_mdm: non-positive snapshot");
      if (lam > 0.0) s -= lam * std::log(lam);
    }

    res.times.push_back(t);
    res.entropy.push_back(s);
    res.entropy_s1.push_back(1.0 - rho.purity());
    res.x2.push_back(cur.x2());
    res.min_eig.push_back(eigs(eigs.size() - 1));
    if (keep_snapshots) res.snapshots.push_back(std::move(rho));
  }
  return res;
}

double entropy_S(const DensityKernel& rho) {
  const Eigen::VectorXd eigs = hermitian_eigenvalues(rho.op());
  double s = 0.0;
  for (int i = 0; i < eigs.size(); ++i) {
    const double lam = eigs(i);
    if (lam < -1e-6) throw NumericalError("entropy_S: non-positive state");
    if (lam > 0.0) s -= lam * std::log(lam);
  }
  return s;
}

double entropy_S1(const DensityKernel& rho) { return 1.0 - rho.purity(); }

double entropy_S_first_order(double kappa_x2) {
  const double q = 2.0 * kappa_x2;
  if (q <= 0.0) return 0.0;
  return q * (1.0 - std::log(q));
}

double entropy_S1_first_order(double kappa_x2) { return 4.0 * kappa_x2; }

SpreadFit spread_fit(const std::vector<double>& times, const std::vector<double>& x2, double mass,
                     double residual_threshold) {
  if (times.size() != x2.size() || times.size() < 3) {
    throw ValidationError("spread_fit: need at least three samples");
  }
  const int n = static_cast<int>(times.size());
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) {
    a(i, 0) = 1.0;
    a(i, 1) = times[i];
    a(i, 2) = times[i] * times[i];
    b(i) = x2[i];
  }
  const Eigen::Vector3d coef = a.colPivHouseholderQr().solve(b);
  const double rms = std::sqrt((a * coef - b).squaredNorm() / n);

  SpreadFit fit;
  fit.residual = rms;
  const double scale = std::abs(b.maxCoeff()) + std::abs(b.minCoeff());
  fit.quadratic_ok = rms <= residual_threshold * std::max(scale, 1e-300);
  if (coef(2) <= 0.0) {
    // Stationary or concave data: no spreading curvature.
    fit.energy = 0.0;
    fit.t_min = times.front();
    fit.a = b.minCoeff();
    return fit;
  }
  fit.energy = 0.5 * mass * coef(2);
  fit.t_min = -coef(1) / (2.0 * coef(2));
  fit.a = coef(0) - coef(1) * coef(1) / (4.0 * coef(2));
  return fit;
}

TwoSidedVerdict two_sided_check(const EvolutionResult& result, double noise_tol) {
  const auto& s1 = result.entropy_s1;
  const auto& t = result.times;
  if (s1.size() < 3) throw ValidationError("two_sided_check: need at least three samples");

  TwoSidedVerdict v;
  double lo = s1[0], hi = s1[0];
  std::size_t imin = 0;
  for (std::size_t i = 1; i < s1.size(); ++i) {
    lo = std::min(lo, s1[i]);
    hi = std::max(hi, s1[i]);
    if (s1[i] < s1[imin]) imin = i;
  }
  if (hi - lo <= noise_tol) {
    v.flat = true;
    v.t_min = t.front();
    return v;
  }

  // Sub-grid minimum from the parabola through the three smallest samples.
  if (imin == 0 || imin + 1 == s1.size()) {
    v.t_min = t[imin];
  } else {
    const double t0 = t[imin - 1], t1 = t[imin], t2 = t[imin + 1];
    const double f0 = s1[imin - 1], f1 = s1[imin], f2 = s1[imin + 1];
    const double denom = (t1 - t0) * (f1 - f2) - (t1 - t2) * (f1 - f0);
    v.t_min = std::abs(denom) > 0
                  ? t1 - 0.5 *
                            ((t1 - t0) * (t1 - t0) * (f1 - f2) -
                             (t1 - t2) * (t1 - t2) * (f1 - f0)) /
                            denom
                  : t1;
  }

  v.monotone_before = imin > 0;
  for (std::size_t i = 0; i < imin; ++i) {
    if (!(s1[i + 1] < s1[i] + noise_tol)) v.monotone_before = false;
  }
  v.monotone_after = imin + 1 < s1.size();
  for (std::size_t i = imin; i + 1 < s1.size(); ++i) {
    if (!(s1[i + 1] > s1[i] - noise_tol)) v.monotone_after = false;
  }
  return v;
}

double positivity_probe(const WaveFunction& psi, double kappa, double mass, double dt) {
  DensityKernel rho = build_rho_pure(psi);
  if (dt == 0.0) return rho.min_eigenvalue();
  MasterEqSpec spec = MasterEqSpec::mdm_gauss(kappa, HamiltonianSpec::free_particle(mass), dt);
  MasterTrajectory traj = integrate_master(rho, spec, 1, 1);
  return traj.snapshots.back().min_eigenvalue();
}

double mdm_rhs_residual(const WaveFunction& psi, double kappa, double mass) {
  DensityKernel rho = build_rho_pure(psi);
  MasterEqSpec spec = MasterEqSpec::mdm_gauss(kappa, HamiltonianSpec::free_particle(mass), 1.0);
  DensityKernel rhs = master_rhs(rho, spec);
  return rhs.k.norm() / rho.k.norm();
}

TimescaleReport entropy_timescale_example(const PlanckUnits& units) {
  TimescaleReport rep;
  const double r_pl = planck_convert(rep.radius_cm, "cm", "planck_length", units);
  const double a_pl = rep.a_cm2 / (units.length_cm * units.length_cm);
  const double kappa = 9.0 * rep.ball_mass_planck * rep.ball_mass_planck / (r_pl * r_pl);

  rep.s1_min = 4.0 * kappa * a_pl;
  const double x2_end = rep.kappa_x2_target / kappa;
  rep.s1_final = 4.0 * rep.kappa_x2_target;

  // <x^2>(t) = A + (2E/M) t^2 with E = p^2/(2M), p^2 = 1/(4A)
  const double mass = rep.ball_mass_planck;
  const double e = 1.0 / (8.0 * a_pl * mass);
  const double t_pl = std::sqrt((x2_end - a_pl) / (2.0 * e / mass));
  rep.t_seconds = t_pl * units.time_s;
  rep.t_years = rep.t_seconds / kSecondsPerYear;
  return rep;
}

}  // namespace gdqm
