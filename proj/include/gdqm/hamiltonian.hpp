#pragma once

#include <Eigen/Dense>

#include "gdqm/grid.hpp"

namespace gdqm {

/// Would-be Hamiltonian H = p^2/2M + V(x) on a hard-wall grid.
struct HamiltonianSpec {
  enum class Kind { Free, Harmonic, Box, Potential };
  Kind kind = Kind::Free;
  double mass = 1.0;
  double spring_k = 0.0;    // Harmonic
  double half_width = 0.0;  // Box
  Eigen::VectorXd v;        // Potential samples

  static HamiltonianSpec free_particle(double mass);
  static HamiltonianSpec harmonic(double mass, double spring_k);
  static HamiltonianSpec box(double mass, double half_width);
  static HamiltonianSpec potential(double mass, Eigen::VectorXd v_samples);

  /// Potential sampled on the grid. A Box Hamiltonian requires the grid to
  /// coincide with [-half_width, half_width].
  Eigen::VectorXd potential_on(const Grid1D& grid) const;

  /// Dense operator matrix: three-point kinetic term plus diagonal potential.
  Eigen::MatrixXd to_matrix(const Grid1D& grid) const;
};

}  // namespace gdqm
