#include "gdqm/hamiltonian.hpp"

namespace gdqm {

HamiltonianSpec HamiltonianSpec::free_particle(double mass) {
  if (!(mass > 0)) throw ValidationError("HamiltonianSpec: mass must be positive");
  HamiltonianSpec h;
  h.kind = Kind::Free;
  h.mass = mass;
  return h;
}

HamiltonianSpec HamiltonianSpec::harmonic(double mass, double spring_k) {
  if (!(mass > 0)) throw ValidationError("HamiltonianSpec: mass must be positive");
  if (spring_k < 0) throw ValidationError("HamiltonianSpec: spring constant must be nonnegative");
  HamiltonianSpec h;
  h.kind = Kind::Harmonic;
  h.mass = mass;
  h.spring_k = spring_k;
  return h;
}

HamiltonianSpec HamiltonianSpec::box(double mass, double half_width) {
  if (!(mass > 0) || !(half_width > 0)) {
    throw ValidationError("HamiltonianSpec: mass and half width must be positive");
  }
  HamiltonianSpec h;
  h.kind = Kind::Box;
  h.mass = mass;
  h.half_width = half_width;
  return h;
}

HamiltonianSpec HamiltonianSpec::potential(double mass, Eigen::VectorXd v_samples) {
  if (!(mass > 0)) throw ValidationError("HamiltonianSpec: mass must be positive");
  HamiltonianSpec h;
  h.kind = Kind::Potential;
  h.mass = mass;
  h.v = std::move(v_samples);
  return h;
}

Eigen::VectorXd HamiltonianSpec::potential_on(const Grid1D& grid) const {
  switch (kind) {
    case Kind::Free:
      return Eigen::VectorXd::Zero(grid.n);
    case Kind::Harmonic: {
      Eigen::VectorXd v(grid.n);
      for (int i = 0; i < grid.n; ++i) v(i) = 0.5 * spring_k * grid.x(i) * grid.x(i);
      return v;
    }
    case Kind::Box: {
      const double tol = 1e-9 * half_width;
      if (std::abs(grid.x_min + half_width) > tol || std::abs(grid.x_max - half_width) > tol) {
        throw ValidationError("box Hamiltonian: grid must span [-delta, delta]");
      }
      return Eigen::VectorXd::Zero(grid.n);
    }
    case Kind::Potential:
      if (v.size() != grid.n) throw ValidationError("potential samples do not match grid");
      return v;
  }
  throw ValidationError("HamiltonianSpec: unknown kind");
}

Eigen::MatrixXd HamiltonianSpec::to_matrix(const Grid1D& grid) const {
  const int n = grid.n;
  const double inv = 1.0 / (2.0 * mass * grid.dx() * grid.dx());
  Eigen::VectorXd pot = potential_on(grid);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = 2.0 * inv + pot(i);
    if (i + 1 < n) h(i, i + 1) = h(i + 1, i) = -inv;
  }
  return h;
}

}  // namespace gdqm
