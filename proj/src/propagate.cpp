#include "gdqm/propagate.hpp"

#include <cmath>

namespace gdqm {

namespace {

// Thomas solve for a complex tridiagonal system with constant off-diagonal
// `off` and per-row diagonal `diag`. The Cayley matrices are strictly
// diagonally dominant, so no pivoting is needed.
void tridiag_solve(const Eigen::VectorXcd& diag, cplx off, Eigen::VectorXcd& rhs) {
  const int n = static_cast<int>(diag.size());
  Eigen::VectorXcd c(n);
  c(0) = off / diag(0);
  rhs(0) /= diag(0);
  for (int i = 1; i < n; ++i) {
    const cplx denom = diag(i) - off * c(i - 1);
    c(i) = off / denom;
    rhs(i) = (rhs(i) - off * rhs(i - 1)) / denom;
  }
  for (int i = n - 2; i >= 0; --i) {
    rhs(i) -= c(i) * rhs(i + 1);
  }
}

}  // namespace

WaveFunction schrodinger_propagate(const WaveFunction& psi, const HamiltonianSpec& h, double t,
                                   const PropagateOptions& opts) {
  if (t == 0.0) return psi;
  if (t < 0) throw ValidationError("schrodinger_propagate: negative time");

  const Grid1D& grid = psi.grid;
  const int n = grid.n;
  const double dx = grid.dx();
  const Eigen::VectorXd pot = h.potential_on(grid);
  const double kin = 1.0 / (2.0 * h.mass * dx * dx);

  double dt = opts.dt;
  if (!(dt > 0)) dt = t / std::ceil(t / 0.005);
  const int steps = static_cast<int>(std::llround(t / dt));
  if (std::abs(steps * dt - t) > 1e-9 * t) {
    dt = t / steps;  // land exactly on t
  }

  // (1 + i dt H / 2) psi_next = (1 - i dt H / 2) psi
  const cplx half(0.0, 0.5 * dt);
  Eigen::VectorXcd diag_plus(n), diag_minus(n);
  for (int i = 0; i < n; ++i) {
    const double hdiag = 2.0 * kin + pot(i);
    diag_plus(i) = 1.0 + half * hdiag;
    diag_minus(i) = 1.0 - half * hdiag;
  }
  const cplx off_plus = half * (-kin);
  const cplx off_minus = -half * (-kin);

  Eigen::VectorXcd cur = psi.amp;
  Eigen::VectorXcd rhs(n);
  for (int s = 0; s < steps; ++s) {
    rhs(0) = diag_minus(0) * cur(0) + off_minus * cur(1);
    for (int i = 1; i + 1 < n; ++i) {
      rhs(i) = diag_minus(i) * cur(i) + off_minus * (cur(i - 1) + cur(i + 1));
    }
    rhs(n - 1) = diag_minus(n - 1) * cur(n - 1) + off_minus * cur(n - 2);
    tridiag_solve(diag_plus, off_plus, rhs);
    cur.swap(rhs);
  }

  WaveFunction out{grid, std::move(cur), Parity::None};
  const double drift = std::abs(out.norm() - 1.0);
  if (drift > opts.norm_drift_tol) {
    throw PropagationUnstable("propagation unstable: norm drift " + std::to_string(drift));
  }
  out.amp /= out.norm();
  return out;
}

}  // namespace gdqm
