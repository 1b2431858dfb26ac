#pragma once

#include <optional>

#include "gdqm/propagate.hpp"
#include "gdqm/spectra.hpp"
#include "gdqm/units.hpp"

namespace gdqm {

/// Right-hand sides for direct density-operator integration:
///   MdmGauss: drho/dt = -i[H, rho] - (2 kappa / M) [x, [p, rho]]
///   Blp:      drho/dt = -i[H, rho] - c [x, [x, rho]]
struct MasterEqSpec {
  enum class Kind { MdmGauss, Blp };
  Kind kind = Kind::MdmGauss;
  HamiltonianSpec h;
  double kappa = 0.0;  // MdmGauss
  double c = 0.0;      // Blp
  double dt = 1e-3;

  static MasterEqSpec mdm_gauss(double kappa, const HamiltonianSpec& h, double dt);
  static MasterEqSpec blp(double c, const HamiltonianSpec& h, double dt);
};

struct EvolutionResult {
  std::vector<double> times;
  std::vector<double> entropy;     // von Neumann S from the spectrum
  std::vector<double> entropy_s1;  // S1 = 1 - tr rho^2
  std::vector<double> x2;          // <x^2>(t)
  std::vector<double> min_eig;
  std::vector<DensityKernel> snapshots;  // filled on request
};

/// Snapshot rule: propagate the would-be state, rebuild the Gaussian-model
/// kernel at each sample time and record S, S1, <x^2> and the smallest
/// eigenvalue. Sample times must be nondecreasing, starting at >= 0.
EvolutionResult evolve_mdm(const WaveFunction& psi0, const HamiltonianSpec& h, double kappa,
                           const std::vector<double>& times, const PropagateOptions& opts = {},
                           bool keep_snapshots = false);

struct MasterTrajectory {
  std::vector<double> times;       // every accepted step
  std::vector<double> trace;
  std::vector<double> entropy_s1;
  std::vector<double> snapshot_times;
  std::vector<DensityKernel> snapshots;
};

/// Classical RK4 on the vectorized kernel with per-step symmetrization.
/// Trace drift beyond 1e-4 aborts with diagnostics.
MasterTrajectory integrate_master(const DensityKernel& rho0, const MasterEqSpec& spec, int steps,
                                  int snapshot_stride = 0);

/// One RK4 evaluation of the master-equation right-hand side.
DensityKernel master_rhs(const DensityKernel& rho, const MasterEqSpec& spec);

/// Von Neumann entropy from the spectrum; eigenvalues in (-1e-6, 0) are
/// clipped to zero, anything below -1e-6 raises NumericalError.
double entropy_S(const DensityKernel& rho);

/// S1 = 1 - tr rho^2 via the kernel contraction.
double entropy_S1(const DensityKernel& rho);

/// First-order formulas in q = 2 kappa <x^2>: S ~ q (1 - ln q), S1 ~ 2 q.
double entropy_S_first_order(double kappa_x2);
double entropy_S1_first_order(double kappa_x2);

struct SpreadFit {
  double a = 0.0;      // minimum of <x^2>
  double energy = 0.0; // from the curvature: <x^2> = A + (2E/M)(t - t_min)^2
  double t_min = 0.0;
  double residual = 0.0;  // rms about the fit
  bool quadratic_ok = true;
};

SpreadFit spread_fit(const std::vector<double>& times, const std::vector<double>& x2,
                     double mass = 1.0, double residual_threshold = 1e-6);

struct TwoSidedVerdict {
  double t_min = 0.0;
  bool monotone_before = false;
  bool monotone_after = false;
  bool flat = false;
};

/// Checks that S1 decreases strictly before its minimum and increases after,
/// up to the sampling-noise tolerance. t_min is refined by quadratic
/// interpolation through the three smallest samples.
TwoSidedVerdict two_sided_check(const EvolutionResult& result, double noise_tol = 1e-10);

/// One explicit MdmGauss step from the pure projector |psi><psi|; returns the
/// smallest eigenvalue afterwards. Positive-definiteness survives only for
/// admissible Gaussian states.
double positivity_probe(const WaveFunction& psi, double kappa, double mass, double dt);

/// ||L[rho]||_F / ||rho||_F for the MdmGauss right-hand side at |psi><psi|.
double mdm_rhs_residual(const WaveFunction& psi, double kappa, double mass);

struct TimescaleReport {
  double ball_mass_planck = 1.0;
  double radius_cm = 1e-2;
  double a_cm2 = 1e-9;     // <x^2> at the entropy minimum
  double kappa_x2_target = 1e-2;
  double s1_min = 0.0;     // 4 kappa A
  double s1_final = 0.0;   // 4 kappa <x^2> at the target
  double t_seconds = 0.0;
  double t_years = 0.0;
};

/// Worked free-spreading example: Planck-mass ball, R = 1e-2 cm,
/// A = 1e-9 cm^2, evolved until kappa <x^2> reaches 1e-2, with the
/// uncertainty-principle estimate p^2 = 1/(4A).
TimescaleReport entropy_timescale_example(const PlanckUnits& units = {});

}  // namespace gdqm
