#include "gdqm/experiments.hpp"

#include <cmath>
#include <numbers>

namespace gdqm {

WaveFunction bead_ground_state(double delta, int points) {
  if (!(delta > 0)) throw ValidationError("bead_ground_state: delta must be positive");
  Grid1D grid = symmetric_grid(delta, points);
  Eigen::VectorXcd amp(points);
  for (int i = 0; i < points; ++i) {
    amp(i) = std::cos(std::numbers::pi * grid.x(i) / (2.0 * delta));
  }
  return make_wavefunction(grid, std::move(amp), Parity::Even);
}

// -- PMT ------------------------------------------------------------------------

void PMTConfig::validate() const {
  if (!(stop_half_gap > 0)) throw ValidationError("PMTConfig: stop half gap must be positive");
  if (!(probe_mass > 0)) throw ValidationError("PMTConfig: probe mass must be positive");
  if (bead_points < 8 || probe_points < 8) throw ValidationError("PMTConfig: grids too coarse");
  const long dim = static_cast<long>(bead_points) * probe_points;
  if (dim > kMaxKernelDim) {
    throw InstanceTooLarge("PMTConfig: two-body dimension " + std::to_string(dim) +
                           " exceeds cap " + std::to_string(kMaxKernelDim));
  }
}

namespace {

struct TwoBodyOut {
  Grid1D bead_grid;
  Grid1D probe_grid;
  Eigen::MatrixXcd phi;  // phi(x_i, y_j) scattered state
};

// Scatter the probe packet off the bead mirror by exact diagonalization of
// the two-body Hamiltonian (hard walls, smooth contact potential).
TwoBodyOut scatter(const PMTConfig& cfg) {
  const int nb = cfg.bead_points, np = cfg.probe_points;
  TwoBodyOut out;
  out.bead_grid = symmetric_grid(cfg.stop_half_gap, nb);
  out.probe_grid = symmetric_grid(cfg.probe_span, np);

  const WaveFunction bead = bead_ground_state(cfg.stop_half_gap, nb);
  const WaveFunction probe =
      gaussian_state(out.probe_grid, cfg.probe_sigma, cfg.probe_start, cfg.probe_momentum);

  const int dim = nb * np;
  const Eigen::MatrixXd tb = HamiltonianSpec::free_particle(cfg.bead.mass).to_matrix(out.bead_grid);
  const Eigen::MatrixXd tp = HamiltonianSpec::free_particle(cfg.probe_mass).to_matrix(out.probe_grid);

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  auto idx = [np](int i, int j) { return i * np + j; };
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < np; ++j) {
      const int row = idx(i, j);
      for (int k = 0; k < nb; ++k) {
        if (tb(i, k) != 0.0) h(row, idx(k, j)) += tb(i, k);
      }
      for (int k = 0; k < np; ++k) {
        if (tp(j, k) != 0.0) h(row, idx(i, k)) += tp(j, k);
      }
      // Reflecting wall once the probe reaches the mirror face.
      const double gap = out.probe_grid.x(j) - out.bead_grid.x(i);
      h(row, row) += cfg.wall_height / (1.0 + std::exp(gap / cfg.wall_width));
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success) throw NumericalError("pmt scatter: eigensolver failed");

  Eigen::VectorXcd in(dim);
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < np; ++j) in(idx(i, j)) = bead.amp(i) * probe.amp(j);
  }
  const Eigen::VectorXd phases = es.eigenvalues() * cfg.flight_time;
  Eigen::VectorXcd coef = es.eigenvectors().transpose() * in;
  for (int k = 0; k < dim; ++k) coef(k) *= std::exp(cplx(0.0, -phases(k)));
  Eigen::VectorXcd flat = es.eigenvectors() * coef;

  out.phi.resize(nb, np);
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < np; ++j) out.phi(i, j) = flat(idx(i, j));
  }
  return out;
}

// Reduced probe kernel sum_x phi(x, y) phi*(x, y') exp(-D(x,y;x,y')) dx.
DensityKernel reduce_to_probe(const TwoBodyOut& s, const PMTConfig& cfg, bool with_decoherence) {
  const int nb = s.bead_grid.n, np = s.probe_grid.n;
  const double dxb = s.bead_grid.dx();

  NBodyConfig two;
  two.masses = {cfg.bead.mass, cfg.probe_mass};
  two.radii = {cfg.bead.radius, cfg.bead.radius};

  DensityKernel rho{{s.probe_grid}, Eigen::MatrixXcd::Zero(np, np)};
  std::vector<double> q(2), qp(2);
  for (int j = 0; j < np; ++j) {
    for (int jp = 0; jp <= j; ++jp) {
      cplx acc = 0.0;
      for (int i = 0; i < nb; ++i) {
        cplx term = s.phi(i, j) * std::conj(s.phi(i, jp));
        if (with_decoherence) {
          double d = 0.0;
          if (cfg.dmodel == PMTConfig::DModel::NBodyGaussian) {
            q[0] = s.bead_grid.x(i);
            q[1] = s.probe_grid.x(j);
            qp[0] = q[0];
            qp[1] = s.probe_grid.x(jp);
            d = dexp_nbody_gaussian(two, q, qp);
          }
          // LightProbeReduced: d depends on the bead coordinate only, and the
          // probe reduction holds it equal on both sides, so d(x, x) = 0.
          term *= std::exp(-d);
        }
        acc += term;
      }
      rho.k(jp, j) = acc * dxb;
      rho.k(j, jp) = std::conj(acc * dxb);
    }
  }
  return rho;
}

ObservableKernel probe_packet_projector(const Grid1D& grid) {
  // |g><g| for a broad displaced packet: a genuinely non-diagonal kernel.
  WaveFunction g = gaussian_state(grid, 1.4, -1.0, 1.0);
  Eigen::MatrixXcd a = g.amp * g.amp.adjoint();
  return ObservableKernel::custom(std::move(a));
}

}  // namespace

PMTReport pmt_run(const PMTConfig& cfg) {
  cfg.validate();
  const TwoBodyOut s = scatter(cfg);
  const DensityKernel rho = reduce_to_probe(s, cfg, true);
  const DensityKernel rho0 = reduce_to_probe(s, cfg, false);

  PMTReport rep;
  rep.mass_ratio = cfg.probe_mass / cfg.bead.mass;
  for (int j = 0; j < rho.dim(); ++j) {
    rep.max_diag_discrepancy =
        std::max(rep.max_diag_discrepancy, std::abs(rho.k(j, j).real() - rho0.k(j, j).real()) +
                                               std::abs(rho.k(j, j).imag() - rho0.k(j, j).imag()));
  }

  auto add = [&](const std::string& name, bool diag, const ObservableKernel& obs) {
    PMTObservableRow row;
    row.name = name;
    row.position_diagonal = diag;
    row.with_decoherence = expect(rho, obs);
    row.without_decoherence = expect(rho0, obs);
    row.discrepancy = std::abs(row.with_decoherence - row.without_decoherence);
    rep.rows.push_back(std::move(row));
  };

  const Grid1D& pg = s.probe_grid;
  Eigen::VectorXd y2(pg.n), window(pg.n);
  for (int j = 0; j < pg.n; ++j) {
    y2(j) = pg.x(j) * pg.x(j);
    window(j) = std::exp(-pg.x(j) * pg.x(j) / 8.0);
  }
  add("f(y) = y", true, ObservableKernel::position());
  add("f(y) = y^2", true, ObservableKernel::position_fn(y2));
  add("f(y) = gaussian window", true, ObservableKernel::position_fn(window));
  add("p_y", false, ObservableKernel::momentum());
  add("p_y^2", false, ObservableKernel::momentum_squared());
  add("packet projector |g><g|", false, probe_packet_projector(pg));
  return rep;
}

LightProbeReport pmt_light_probe(PMTConfig base, const std::vector<double>& mass_ratios) {
  LightProbeReport rep;
  for (double ratio : mass_ratios) {
    PMTConfig cfg = base;
    cfg.probe_mass = ratio * base.bead.mass;
    cfg.dmodel = PMTConfig::DModel::NBodyGaussian;
    cfg.validate();
    const TwoBodyOut s = scatter(cfg);
    const DensityKernel rho = reduce_to_probe(s, cfg, true);
    const DensityKernel rho0 = reduce_to_probe(s, cfg, false);
    const ObservableKernel obs = probe_packet_projector(s.probe_grid);
    LightProbePoint pt;
    pt.mass_ratio = ratio;
    const double with = expect(rho, obs);
    const double without = expect(rho0, obs);
    pt.general_kernel_discrepancy = std::abs(with - without);
    pt.scale = std::max(std::abs(without), 1e-300);
    rep.sweep.push_back(pt);
  }

  base.dmodel = PMTConfig::DModel::LightProbeReduced;
  base.validate();
  const TwoBodyOut s = scatter(base);
  const DensityKernel rho = reduce_to_probe(s, base, true);
  const DensityKernel rho0 = reduce_to_probe(s, base, false);
  const ObservableKernel obs = probe_packet_projector(s.probe_grid);
  rep.reduced_model_discrepancy = std::abs(expect(rho, obs) - expect(rho0, obs));
  return rep;
}

// -- Penrose ----------------------------------------------------------------------

void PenroseConfig::validate() const {
  if (times.size() < 3 || times.size() != xi.size()) {
    throw ValidationError("PenroseConfig: need matching schedules with at least 3 samples");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw ValidationError("PenroseConfig: times must increase");
  }
  if (xi.front() != 0.0) throw ValidationError("PenroseConfig: xi(0) must be 0");
  if (xi.back() != 0.0) throw ValidationError("PenroseConfig: xi(t_f) must be 0");
  if (t_m_index <= 0 || t_m_index + 1 >= static_cast<int>(times.size())) {
    throw ValidationError("PenroseConfig: t_m must be interior");
  }
  for (double v : xi) {
    if (v < 0) throw ValidationError("PenroseConfig: displacements must be nonnegative");
    if (v > xi[t_m_index]) throw ValidationError("PenroseConfig: maximum must sit at t_m");
  }
}

PenroseConfig PenroseConfig::triangle(const BallParams& mirror, double xi_max, Theory theory,
                                      int half_steps, double t_f) {
  PenroseConfig cfg;
  cfg.mirror = mirror;
  cfg.theory = theory;
  cfg.t_m_index = half_steps;
  const int total = 2 * half_steps;
  for (int i = 0; i <= total; ++i) {
    cfg.times.push_back(t_f * i / total);
    const double frac = 1.0 - std::abs(i - half_steps) / static_cast<double>(half_steps);
    cfg.xi.push_back(xi_max * frac);
  }
  return cfg;
}

PenroseReport penrose_run(const PenroseConfig& cfg) {
  cfg.validate();
  PenroseReport rep;
  rep.times = cfg.times;
  rep.d_max = dexp_auto(cfg.xi[cfg.t_m_index], cfg.mirror, cfg.quad);

  double running_min_r = 1.0;
  for (std::size_t i = 0; i < cfg.times.size(); ++i) {
    const double displacement = cfg.xi[i];
    const double r = std::exp(-dexp_auto(displacement, cfg.mirror, cfg.quad));
    running_min_r = std::min(running_min_r, r);

    double theory_factor = 1.0;
    switch (cfg.theory) {
      case PenroseConfig::Theory::Standard:
        theory_factor = 1.0;
        break;
      case PenroseConfig::Theory::Kay:
        theory_factor = r;
        break;
      case PenroseConfig::Theory::PenroseCollapse:
        theory_factor = running_min_r;
        break;
    }
    // Two-level mirror overlap: the displaced state of a macroscopic mirror
    // is orthogonal to rest.
    const double mirror_overlap = displacement == 0.0 ? 1.0 : 0.0;
    const double coherence = mirror_overlap * theory_factor;

    rep.gravity_overlap.push_back(r);
    rep.coherence.push_back(coherence);

    // Matter state on {A, B} x {rest, displaced}; branch A occupies the
    // displaced mirror state whenever xi != 0.
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    const int ia = displacement == 0.0 ? 0 : 1;  // mirror index in branch A
    const int a_slot = 0 * 2 + ia;
    const int b_slot = 1 * 2 + 0;
    rho(a_slot, a_slot) = 0.5;
    rho(b_slot, b_slot) = 0.5;
    rho(a_slot, b_slot) = 0.5 * theory_factor;
    rho(b_slot, a_slot) = 0.5 * theory_factor;
    rep.rho_matter.push_back(rho);

    Eigen::Matrix2cd photon;
    photon << 0.5, 0.5 * coherence, 0.5 * coherence, 0.5;
    if (static_cast<int>(i) == cfg.t_m_index) rep.photon_mid = photon;
    if (i + 1 == cfg.times.size()) rep.photon_final = photon;
  }

  rep.p_detector = 0.5 * (1.0 - rep.coherence.back());
  rep.p_source = 1.0 - rep.p_detector;
  return rep;
}

// -- radiation ---------------------------------------------------------------------

namespace {
constexpr double kNewtonG = 6.6743e-8;        // cm^3 g^-1 s^-2
constexpr double kHbar = 1.054571817e-27;     // erg s
constexpr double kLightSpeed = 2.99792458e10; // cm / s
}  // namespace

RadiationEstimate graviton_estimate(const RadiationInput& in) {
  if (in.mass_g < 0 || in.amplitude_cm < 0 || in.omega_per_s < 0) {
    throw ValidationError("graviton_estimate: inputs must be nonnegative");
  }
  RadiationEstimate est;
  const double l2 = in.amplitude_cm * in.amplitude_cm;
  const double w2 = in.omega_per_s * in.omega_per_s;
  est.n_per_cycle = est.prefactor * in.mass_g * in.mass_g * l2 * l2 * w2 * w2 * kNewtonG /
                    (kHbar * std::pow(kLightSpeed, 5));
  return est;
}

RadiationEstimate photon_emission_estimate(const RadiationInput& in) {
  if (in.amplitude_cm < 0 || in.omega_per_s < 0 || in.area_cm2 < 0) {
    throw ValidationError("photon_emission_estimate: inputs must be nonnegative");
  }
  RadiationEstimate est;
  const double w2 = in.omega_per_s * in.omega_per_s;
  est.n_per_cycle = est.prefactor * in.amplitude_cm * in.amplitude_cm * w2 * w2 * in.area_cm2 /
                    (180.0 * std::numbers::pi * std::pow(kLightSpeed, 4));
  return est;
}

}  // namespace gdqm
