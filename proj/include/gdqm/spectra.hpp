#pragma once

#include <array>
#include <utility>

#include "gdqm/eigenh.hpp"
#include "gdqm/states.hpp"

namespace gdqm {

// -- first-order diagonalization ----------------------------------------------

struct PerturbativeSpectrum {
  struct Pair {
    double lambda;
    WaveFunction phi;
  };
  std::vector<Pair> pairs;  // descending probability
  double order_param = 0.0;
};

/// Two-pair first-order diagonalization of the Gaussian-model kernel for a
/// parity eigenstate:
///   lambda1 = 1 - 2 kappa <x^2>,  phi1 ~ (1 + kappa <x^2>) psi - kappa x^2 psi
///   lambda2 = 2 kappa <x^2>,      phi2 ~ x psi
/// kappa = 0 collapses to the single pair (1, psi). Untagged states are
/// rejected; use general_first_eigenpair for those.
PerturbativeSpectrum perturb_diag_1d(const WaveFunction& psi, double kappa);

/// First eigenpair without parity assumptions:
///   lambda1 = 1 - 2 kappa (Dx)^2,
///   phi1 ~ (1 + 2 kappa (Dx)^2) psi - kappa x^2 psi + 2 kappa <x> x psi
///          - kappa <x^2> psi.
std::pair<double, WaveFunction> general_first_eigenpair(const WaveFunction& psi, double kappa);

struct ProductPerturbativeSpectrum {
  struct Pair {
    double lambda;
    NBodyState phi;
  };
  std::vector<Pair> pairs;
  double order_param = 0.0;  // kappa sum_j <x_j^2>
};

/// Tensor-product state, collective Gaussian kernel
/// exp(-kappa (sum x_j - sum x'_j)^2). All factors must share one parity.
ProductPerturbativeSpectrum perturb_diag_product(const std::vector<WaveFunction>& factors,
                                                 double kappa);

/// Separable 3D state alpha(x) beta(y) gamma(z) with even factors
/// (the eightfold reflection symmetry). Evaluated from 1D factor integrals.
struct Spectrum3D {
  double kappa = 0.0;
  double order_param = 0.0;              // kappa <x^2 + y^2 + z^2>
  double lambda1 = 1.0;                  // 1 - 2 kappa <r^2>
  std::array<double, 3> lambda_axis{};   // 2 kappa <x^2>, <y^2>, <z^2>
  std::array<WaveFunction, 3> factors;   // normalized input factors
  std::array<WaveFunction, 3> x_factors; // normalized x alpha, y beta, z gamma
};

Spectrum3D perturb_diag_3d(const WaveFunction& fx, const WaveFunction& fy, const WaveFunction& fz,
                           double kappa);

// -- spectral events ------------------------------------------------------------

struct Event {
  double probability = 0.0;  // multiplicity times mean eigenvalue
  int multiplicity = 0;
  double eigenvalue = 0.0;   // mean eigenvalue of the cluster
  Eigen::MatrixXcd basis;    // dim x multiplicity, orthonormal columns
};

struct EventSet {
  std::vector<Event> events;
  double residual = 0.0;  // probability mass below the floor
};

inline constexpr double kDefaultClusterTol = 1e-8;
inline constexpr double kDefaultEventFloor = 1e-12;

/// Full Hermitian eigendecomposition of the kernel; eigenvalues within the
/// relative cluster tolerance merge into one subspace with probability
/// m lambda; everything below the floor goes to the residual.
EventSet brute_force_events(const DensityKernel& rho, double cluster_tol = kDefaultClusterTol,
                            double floor = kDefaultEventFloor);

/// Same clustering applied to a precomputed descending eigenvalue list (used
/// for product spectra where the factorization is cheaper than the kernel).
EventSet cluster_events(const Eigen::VectorXd& descending, double cluster_tol, double floor);

// -- exact two-peak cat diagonalization ----------------------------------------

/// Two sharply localized peaks with gravity overlap <g1|g2> = exp(-D(a)).
struct CatState {
  cplx c1;
  cplx c2;
  double overlap;  // in [0, 1]

  CatState(cplx c1, cplx c2, double overlap);
  Eigen::Matrix2cd matrix() const;  // [[|c1|^2, c1 c2* e], [c1* c2 e, |c2|^2]]
};

struct CatDiagonalization {
  double a_prob = 1.0;  // larger eigenvalue
  double b_prob = 0.0;
  cplx k{1.0, 0.0};  // phi1 = k psi1 + s* psi2
  cplx s{0.0, 0.0};  // phi2 = -s psi1 + k* psi2
};

CatDiagonalization cat_exact_diag(const CatState& cat);

// -- beables --------------------------------------------------------------------

struct BeableReport {
  bool beable = false;
  std::vector<double> event_values;  // value of B on each non-residual event
  double commutator_norm = 0.0;      // ||[B, rho]||_F / (||B|| ||rho||)
};

/// B is a beable for rho when it commutes with rho (within tol) and each
/// non-residual event subspace lies in a single eigenspace of B.
BeableReport is_beable(const ObservableKernel& b, const DensityKernel& rho, double tol = 1e-8);

/// Probability-weighted sum of beable values over the events.
double beable_expectation(const EventSet& events, const std::vector<double>& values);

}  // namespace gdqm
