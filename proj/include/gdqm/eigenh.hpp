#pragma once

#include <Eigen/Dense>
#include <vector>

namespace gdqm {

struct EigenPair {
  double value;
  Eigen::VectorXcd vector;
};

/// Full spectrum of a Hermitian matrix, eigenvalues sorted descending,
/// eigenvectors orthonormal.
std::vector<EigenPair> hermitian_spectrum(const Eigen::MatrixXcd& m);

/// Eigenvalues only, descending.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m);

}  // namespace gdqm
