#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "gdqm/decoherence.hpp"
#include "gdqm/grid.hpp"

namespace gdqm {

using cplx = std::complex<double>;

enum class Parity { None, Even, Odd };

/// The "would-be" state: complex amplitudes on a uniform grid, unit norm
/// under the grid measure sum |psi_i|^2 dx.
struct WaveFunction {
  Grid1D grid;
  Eigen::VectorXcd amp;
  Parity parity = Parity::None;

  int n() const { return grid.n; }
  double dx() const { return grid.dx(); }
  double norm() const;
  /// <x^k> in |psi|^2.
  double moment(int k) const;
  double x2() const { return moment(2); }
  double mean_x() const { return moment(1); }
  double var_x() const;

  /// Normalizes in place and re-checks the parity tag.
  void normalize();
};

/// Builds a normalized wave function; throws if a requested parity tag does
/// not hold on the grid (needs a symmetric grid, tolerance 1e-10).
WaveFunction make_wavefunction(const Grid1D& grid, Eigen::VectorXcd amplitudes,
                               Parity parity = Parity::None);

cplx braket(const WaveFunction& a, const WaveFunction& b);

// -- stock states used across the experiments and tests ----------------------

/// exp(-(x-center)^2/(4 sigma^2) + i p x + i chirp (x-center)^2), normalized.
WaveFunction gaussian_state(const Grid1D& grid, double sigma, double center = 0.0,
                            double momentum = 0.0, double chirp = 0.0);

/// exp(-c x^2) for complex c with Re c > 0, normalized on the grid.
WaveFunction gaussian_state_c(const Grid1D& grid, cplx c);

/// Hard-wall box eigenmode m = 1, 2, ... on a symmetric grid [-delta, delta]:
/// cos(m pi x / 2 delta) for odd m, sin(m pi x / 2 delta) for even m.
WaveFunction box_mode(const Grid1D& grid, int m);

/// Symmetric two-bump state (peaks at +-separation/2, width sigma), even.
WaveFunction double_peak_state(const Grid1D& grid, double separation, double sigma);

/// Two-point cat: amplitude c1 on the node nearest -separation/2 and c2 on
/// the node nearest +separation/2. The sharp-peak limit of a cat state.
WaveFunction point_cat_state(const Grid1D& grid, cplx c1, cplx c2, double separation);

// -- density kernels ----------------------------------------------------------

/// Discretized two-point kernel rho(q, q') on the product of per-body grids.
/// Hermitian by construction; trace measured with weight dx^N.
struct DensityKernel {
  std::vector<Grid1D> grids;
  Eigen::MatrixXcd k;

  int dim() const { return static_cast<int>(k.rows()); }
  int bodies() const { return static_cast<int>(grids.size()); }
  double trace_weight() const;
  /// Operator matrix acting on coefficient vectors: kernel times the measure.
  Eigen::MatrixXcd op() const { return k * trace_weight(); }
  double trace() const;
  /// tr rho^2 through the kernel contraction.
  double purity() const;
  double min_eigenvalue() const;
  Eigen::VectorXd diagonal() const;
};

/// Largest kernel dimension accepted by the N-body constructor.
inline constexpr int kMaxKernelDim = 4096;

/// rho(x,x') = psi(x) psi*(x') exp(-kappa (x-x')^2).
DensityKernel build_rho_gauss(const WaveFunction& psi, double kappa);

/// rho = rho0 exp(-D(|x-x'|)) with D from the decoherence spec (1D
/// centre-of-mass reduction). In auto mode the regime is chosen once per
/// kernel from the largest grid separation so that a single D form covers
/// every entry.
DensityKernel build_rho_ball(const WaveFunction& psi, const BallParams& ball,
                             const DecoherenceSpec& dspec);

/// Pure projector |psi><psi| (kappa = 0 special case).
DensityKernel build_rho_pure(const WaveFunction& psi);

/// N-body flattened product state.
struct NBodyState {
  std::vector<Grid1D> grids;
  Eigen::VectorXcd amp;
  int dim() const { return static_cast<int>(amp.size()); }
  double weight() const;
  /// Coordinates of flat configuration index q.
  std::vector<double> config(int q) const;
};

NBodyState tensor_product(const std::vector<WaveFunction>& factors);

/// rho(q;q') = Psi(q) Psi*(q') exp(-d(q, q')); d must vanish for q = q'.
DensityKernel build_rho_nbody(const NBodyState& psi,
                              const std::function<double(const std::vector<double>&,
                                                         const std::vector<double>&)>& d);

/// First-order truncation rho0 - kappa [x,[x,rho0]] as a kernel.
DensityKernel first_order_rho(const WaveFunction& psi, double kappa);

// -- observables --------------------------------------------------------------

struct ObservableKernel {
  enum class Kind { PositionFn, Momentum, MomentumSquared, Parity, Custom };
  Kind kind = Kind::PositionFn;
  Eigen::VectorXd f;        // PositionFn samples
  Eigen::MatrixXcd kernel;  // Custom kernel A(x,x')

  static ObservableKernel position_fn(Eigen::VectorXd values);
  static ObservableKernel position();  // f(x) = x
  static ObservableKernel momentum();
  static ObservableKernel momentum_squared();
  static ObservableKernel parity();
  static ObservableKernel custom(Eigen::MatrixXcd a);

  /// Operator matrix on coefficient vectors for the given grid. Momentum is
  /// the central difference, momentum squared the fourth-order five-point
  /// Laplacian, both with hard-wall boundaries; parity needs a symmetric
  /// grid.
  Eigen::MatrixXcd to_operator(const Grid1D& grid) const;
};

/// tr(rho A). Real part returned; imaginary residue above 1e-8 of scale
/// raises a NumericalError for Hermitian observables.
double expect(const DensityKernel& rho, const ObservableKernel& obs);

/// tr(rho P) by direct kernel contraction (no operator matrix).
double expect_parity(const DensityKernel& rho);

/// First-order parity formula: tr(rho0 P) - 4 kappa <psi|x^2 P psi>. For a
/// parity eigenstate this is +-(1 - 4 kappa <x^2>)(sign).
double parity_first_order(const WaveFunction& psi, double kappa);

/// The naive-interpretation p^2 shift: 2 kappa per Cartesian component.
double naive_p2_offset(int dim, double alpha_or_kappa);

struct UncertaintyReport {
  double dx2 = 0;            // squared position uncertainty (physical = would-be)
  double dp2_wouldbe = 0;    // would-be squared momentum uncertainty
  double dp2_physical = 0;   // + 2 alpha
  double heisenberg_lhs = 0; // dx2 * dp2_physical
  double modified_rhs = 0;   // 1/4 + 2 alpha dx2
  double lambda_max = 0;     // 2 pi R / (3 sqrt(6) M)
  double alpha = 0;
};

UncertaintyReport uncertainty_report(const WaveFunction& psi, const BallParams& ball);

}  // namespace gdqm
