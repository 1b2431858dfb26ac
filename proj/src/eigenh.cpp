#include "gdqm/eigenh.hpp"

#include "gdqm/errors.hpp"

namespace gdqm {

std::vector<EigenPair> hermitian_spectrum(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw ValidationError("hermitian_spectrum: matrix must be square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw NumericalError("hermitian_spectrum: eigensolver failed");
  const int n = static_cast<int>(m.rows());
  std::vector<EigenPair> pairs(n);
  for (int i = 0; i < n; ++i) {
    pairs[i].value = solver.eigenvalues()(n - 1 - i);
    pairs[i].vector = solver.eigenvectors().col(n - 1 - i);
  }
  return pairs;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw ValidationError("hermitian_eigenvalues: matrix must be square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("hermitian_eigenvalues: eigensolver failed");
  return solver.eigenvalues().reverse();
}

}  // namespace gdqm
