#pragma once

#include <string>

#include "gdqm/dynamics.hpp"

namespace gdqm {

/// Ground state of the bead between hard stops: psi(x) = cos(pi x / 2 delta)
/// / sqrt(delta) on a symmetric grid spanning [-delta, delta].
WaveFunction bead_ground_state(double delta, int points = 257);

// -- position-measurement harness ----------------------------------------------

struct PMTConfig {
  BallParams bead{1.0, 1.0};
  double stop_half_gap = 1.0;  // delta
  double probe_mass = 0.05;

  int bead_points = 31;
  int probe_points = 41;
  double probe_span = 8.0;
  double probe_start = 3.5;
  double probe_momentum = -2.5;  // aimed at the mirror
  double probe_sigma = 0.9;

  // Short-range reflecting wall at probe-bead contact.
  double wall_height = 60.0;
  double wall_width = 0.2;
  double flight_time = 2.2;

  enum class DModel { NBodyGaussian, LightProbeReduced };
  DModel dmodel = DModel::NBodyGaussian;

  void validate() const;
};

struct PMTObservableRow {
  std::string name;
  bool position_diagonal = false;
  double with_decoherence = 0.0;
  double without_decoherence = 0.0;
  double discrepancy = 0.0;
};

struct PMTReport {
  double mass_ratio = 0.0;
  /// max |rho(x,y;x,y) - rho0(x,y;x,y)| over the configuration diagonal.
  double max_diag_discrepancy = 0.0;
  std::vector<PMTObservableRow> rows;
};

/// Scatters the probe packet off the bead mirror, applies the two-body
/// suppression factor, and compares probe statistics with and without it.
PMTReport pmt_run(const PMTConfig& cfg);

struct LightProbePoint {
  double mass_ratio = 0.0;
  double general_kernel_discrepancy = 0.0;  // arbitrary probe observable
  double scale = 0.0;                       // magnitude of the observable value
};

struct LightProbeReport {
  std::vector<LightProbePoint> sweep;
  /// Discrepancy under the exactly probe-independent reduced d(x, x').
  double reduced_model_discrepancy = 0.0;
};

LightProbeReport pmt_light_probe(PMTConfig base, const std::vector<double>& mass_ratios);

// -- Penrose interferometer ------------------------------------------------------

struct PenroseConfig {
  BallParams mirror{10.0, 1.0};
  std::vector<double> times;  // ascending, starting at 0
  std::vector<double> xi;     // mirror displacement; xi front/back must be 0
  int t_m_index = 1;          // index of the maximal displacement

  enum class Theory { Standard, PenroseCollapse, Kay };
  Theory theory = Theory::Kay;
  QuadratureSpec quad;

  void validate() const;

  /// Triangle schedule 0 -> xi_max -> 0 with 2 half_steps + 1 samples.
  static PenroseConfig triangle(const BallParams& mirror, double xi_max, Theory theory,
                                int half_steps = 4, double t_f = 2.0);
};

struct PenroseReport {
  std::vector<double> times;
  std::vector<double> gravity_overlap;  // r(t) = exp(-D(xi(t)))
  std::vector<double> coherence;        // photon off-diagonal magnitude
  std::vector<Eigen::Matrix4cd> rho_matter;  // basis {A,B} x {rest, displaced}
  Eigen::Matrix2cd photon_mid;
  Eigen::Matrix2cd photon_final;
  double d_max = 0.0;
  double p_detector = 0.0;
  double p_source = 1.0;
};

PenroseReport penrose_run(const PenroseConfig& cfg);

// -- radiation estimates ---------------------------------------------------------

struct RadiationInput {
  double mass_g = 0.0;
  double amplitude_cm = 0.0;
  double omega_per_s = 0.0;
  double area_cm2 = 0.0;
};

struct RadiationEstimate {
  double n_per_cycle = 0.0;
  double prefactor = 1.0;  // pinned order-unity normalization, surfaced
};

/// Quadrupole-formula graviton count per cycle:
///   N = prefactor * m^2 l^4 w^4 G / (hbar c^5).
RadiationEstimate graviton_estimate(const RadiationInput& in);

/// Moving-mirror photon count per cycle (two polarizations):
///   N = prefactor * l^2 w^4 A / (180 pi c^4).
RadiationEstimate photon_emission_estimate(const RadiationInput& in);

}  // namespace gdqm
