#include "gdqm/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace gdqm {

namespace {

WaveFunction scaled_by_x(const WaveFunction& psi) {
  Eigen::VectorXcd amp(psi.n());
  for (int i = 0; i < psi.n(); ++i) amp(i) = psi.grid.x(i) * psi.amp(i);
  Parity flipped = psi.parity == Parity::Even   ? Parity::Odd
                   : psi.parity == Parity::Odd ? Parity::Even
                                               : Parity::None;
  return make_wavefunction(psi.grid, std::move(amp), flipped);
}

}  // namespace

PerturbativeSpectrum perturb_diag_1d(const WaveFunction& psi, double kappa) {
  if (psi.parity == Parity::None) {
    throw ValidationError("perturb_diag_1d: parity required (even or odd state)");
  }
  if (kappa < 0) throw ValidationError("perturb_diag_1d: kappa must be nonnegative");

  PerturbativeSpectrum spec;
  const double x2 = psi.x2();
  spec.order_param = kappa * x2;
  if (kappa == 0.0) {
    spec.pairs.push_back({1.0, psi});
    return spec;
  }

  Eigen::VectorXcd a1(psi.n());
  for (int i = 0; i < psi.n(); ++i) {
    const double x = psi.grid.x(i);
    a1(i) = ((1.0 + kappa * x2) - kappa * x * x) * psi.amp(i);
  }
  spec.pairs.push_back({1.0 - 2.0 * kappa * x2, make_wavefunction(psi.grid, std::move(a1), psi.parity)});
  spec.pairs.push_back({2.0 * kappa * x2, scaled_by_x(psi)});
  return spec;
}

std::pair<double, WaveFunction> general_first_eigenpair(const WaveFunction& psi, double kappa) {
  if (kappa < 0) throw ValidationError("general_first_eigenpair: kappa must be nonnegative");
  if (kappa == 0.0) return {1.0, psi};
  const double mean = psi.mean_x();
  const double x2 = psi.x2();
  const double var = x2 - mean * mean;
  Eigen::VectorXcd amp(psi.n());
  for (int i = 0; i < psi.n(); ++i) {
    const double x = psi.grid.x(i);
    amp(i) = (1.0 + 2.0 * kappa * var - kappa * x * x + 2.0 * kappa * mean * x - kappa * x2) *
             psi.amp(i);
  }
  return {1.0 - 2.0 * kappa * var, make_wavefunction(psi.grid, std::move(amp))};
}

ProductPerturbativeSpectrum perturb_diag_product(const std::vector<WaveFunction>& factors,
                                                 double kappa) {
  if (factors.empty()) throw ValidationError("perturb_diag_product: no factors");
  const Parity parity = factors[0].parity;
  if (parity == Parity::None) {
    throw ValidationError("perturb_diag_product: factors must be parity eigenstates");
  }
  for (const auto& f : factors) {
    if (f.parity != parity) {
      throw ValidationError("perturb_diag_product: factors must share one parity");
    }
  }
  double sum_x2 = 0.0;
  for (const auto& f : factors) sum_x2 += f.x2();

  ProductPerturbativeSpectrum spec;
  spec.order_param = kappa * sum_x2;
  NBodyState base = tensor_product(factors);
  if (kappa == 0.0) {
    spec.pairs.push_back({1.0, std::move(base)});
    return spec;
  }

  const int dim = base.dim();
  NBodyState phi1 = base, phi2 = base;
  for (int q = 0; q < dim; ++q) {
    double xs = 0.0;
    for (double xi : base.config(q)) xs += xi;
    phi1.amp(q) = ((1.0 + kappa * sum_x2) - kappa * xs * xs) * base.amp(q);
    phi2.amp(q) = xs * base.amp(q);
  }
  const double w = base.weight();
  phi1.amp /= std::sqrt(phi1.amp.squaredNorm() * w);
  phi2.amp /= std::sqrt(phi2.amp.squaredNorm() * w);
  spec.pairs.push_back({1.0 - 2.0 * kappa * sum_x2, std::move(phi1)});
  spec.pairs.push_back({2.0 * kappa * sum_x2, std::move(phi2)});
  return spec;
}

Spectrum3D perturb_diag_3d(const WaveFunction& fx, const WaveFunction& fy, const WaveFunction& fz,
                           double kappa) {
  const std::array<const WaveFunction*, 3> fs{&fx, &fy, &fz};
  for (const auto* f : fs) {
    if (f->parity != Parity::Even) {
      throw ValidationError("perturb_diag_3d: the eightfold symmetry needs even factors");
    }
  }
  Spectrum3D s;
  s.kappa = kappa;
  double r2 = 0.0;
  for (int a = 0; a < 3; ++a) {
    const double m2 = fs[a]->x2();
    r2 += m2;
    s.lambda_axis[a] = 2.0 * kappa * m2;
    s.factors[a] = *fs[a];
    s.x_factors[a] = scaled_by_x(*fs[a]);
  }
  s.order_param = kappa * r2;
  s.lambda1 = 1.0 - 2.0 * kappa * r2;
  return s;
}

namespace {

EventSet cluster_events_impl(std::vector<std::pair<double, int>> eigs,  // (value, original index)
                             const Eigen::MatrixXcd* vectors, double cluster_tol, double floor) {
  std::sort(eigs.begin(), eigs.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  EventSet out;
  std::size_t i = 0;
  while (i < eigs.size()) {
    const double lead = eigs[i].first;
    if (lead < floor) break;
    std::size_t j = i + 1;
    while (j < eigs.size() && lead - eigs[j].first <= cluster_tol * std::max(std::abs(lead), floor)) {
      ++j;
    }
    Event ev;
    ev.multiplicity = static_cast<int>(j - i);
    double mean = 0.0;
    for (std::size_t t = i; t < j; ++t) mean += eigs[t].first;
    mean /= ev.multiplicity;
    ev.eigenvalue = mean;
    ev.probability = mean * ev.multiplicity;
    if (vectors) {
      ev.basis.resize(vectors->rows(), ev.multiplicity);
      for (std::size_t t = i; t < j; ++t) {
        ev.basis.col(static_cast<int>(t - i)) = vectors->col(eigs[t].second);
      }
    }
    out.events.push_back(std::move(ev));
    i = j;
  }
  for (; i < eigs.size(); ++i) out.residual += eigs[i].first;
  return out;
}

}  // namespace

EventSet brute_force_events(const DensityKernel& rho, double cluster_tol, double floor) {
  if (!(cluster_tol >= 0) || !(floor >= 0)) {
    throw ValidationError("brute_force_events: tolerances must be nonnegative");
  }
  auto pairs = hermitian_spectrum(rho.op());
  const int dim = rho.dim();
  Eigen::MatrixXcd vectors(dim, dim);
  std::vector<std::pair<double, int>> eigs(dim);
  for (int i = 0; i < dim; ++i) {
    eigs[i] = {pairs[i].value, i};
    vectors.col(i) = pairs[i].vector;
  }
  return cluster_events_impl(std::move(eigs), &vectors, cluster_tol, floor);
}

EventSet cluster_events(const Eigen::VectorXd& descending, double cluster_tol, double floor) {
  std::vector<std::pair<double, int>> eigs(descending.size());
  for (int i = 0; i < descending.size(); ++i) eigs[i] = {descending(i), i};
  return cluster_events_impl(std::move(eigs), nullptr, cluster_tol, floor);
}

CatState::CatState(cplx c1, cplx c2, double overlap) : c1(c1), c2(c2), overlap(overlap) {
  const double total = std::norm(c1) + std::norm(c2);
  if (std::abs(total - 1.0) > 1e-10) {
    throw ValidationError("CatState: |c1|^2 + |c2|^2 must be 1");
  }
  if (overlap < 0.0 || overlap > 1.0) {
    throw ValidationError("CatState: overlap must lie in [0, 1]");
  }
}

Eigen::Matrix2cd CatState::matrix() const {
  Eigen::Matrix2cd m;
  m(0, 0) = std::norm(c1);
  m(1, 1) = std::norm(c2);
  m(0, 1) = c1 * std::conj(c2) * overlap;
  m(1, 0) = std::conj(m(0, 1));
  return m;
}

CatDiagonalization cat_exact_diag(const CatState& cat) {
  const double p = std::norm(cat.c1);
  const double q = std::norm(cat.c2);
  const cplx off = cat.c1 * std::conj(cat.c2) * cat.overlap;
  const double disc = std::sqrt((p - q) * (p - q) + 4.0 * std::norm(off));

  CatDiagonalization d;
  d.a_prob = 0.5 * (1.0 + disc);
  d.b_prob = 0.5 * (1.0 - disc);

  if (std::abs(off) == 0.0) {
    if (p >= q) {
      d.k = 1.0;
      d.s = 0.0;
    } else {
      d.k = 0.0;
      d.s = 1.0;
    }
    return d;
  }
  // Eigenvector of [[p, off], [off*, q]] for the larger eigenvalue A:
  // (k, s*) ~ (off, A - p).
  cplx k = off;
  cplx s_conj = d.a_prob - p;
  const double nrm = std::sqrt(std::norm(k) + std::norm(s_conj));
  d.k = k / nrm;
  d.s = std::conj(s_conj / nrm);
  return d;
}

BeableReport is_beable(const ObservableKernel& b, const DensityKernel& rho, double tol) {
  const int n = rho.dim();
  Eigen::MatrixXcd bop;
  if (b.kind == ObservableKernel::Kind::Custom) {
    if (b.kernel.rows() != n) throw ValidationError("is_beable: kernel dimension mismatch");
    bop = b.kernel * rho.trace_weight();
  } else {
    if (rho.bodies() != 1) throw ValidationError("is_beable: built-in observables are one-body");
    bop = b.to_operator(rho.grids[0]);
  }
  const Eigen::MatrixXcd rop = rho.op();
  const double bn = bop.norm();
  const double rn = rop.norm();

  BeableReport rep;
  rep.commutator_norm = (bop * rop - rop * bop).norm() / std::max(bn * rn, 1e-300);
  bool ok = rep.commutator_norm <= tol;

  const EventSet events = brute_force_events(rho);
  for (const auto& ev : events.events) {
    const Eigen::MatrixXcd bv = bop * ev.basis;
    const Eigen::MatrixXcd m = ev.basis.adjoint() * bv;
    // Invariance of the event subspace under B, and constancy of B on it.
    const double invariance = (bv - ev.basis * m).norm();
    const double mean = m.trace().real() / ev.multiplicity;
    const double spread =
        (m - mean * Eigen::MatrixXcd::Identity(ev.multiplicity, ev.multiplicity)).norm();
    if (invariance > tol * std::max(bn, 1e-300) || spread > tol * std::max(bn, 1e-300)) {
      ok = false;
    }
    rep.event_values.push_back(mean);
  }
  rep.beable = ok;
  return rep;
}

double beable_expectation(const EventSet& events, const std::vector<double>& values) {
  if (values.size() != events.events.size()) {
    throw ValidationError("beable_expectation: one value per event required");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    s += events.events[i].probability * values[i];
  }
  return s;
}

}  // namespace gdqm
