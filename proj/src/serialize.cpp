#include "gdqm/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gdqm {

std::string format_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17e", v);
  return buf;
}

namespace {

json grid_to_json(const Grid1D& g) {
  return json{{"x_min", g.x_min}, {"x_max", g.x_max}, {"n", g.n}};
}

Grid1D grid_from_json(const json& j) {
  return Grid1D(j.at("x_min").get<double>(), j.at("x_max").get<double>(), j.at("n").get<int>());
}

json interleave(const cplx* data, std::size_t n) {
  json arr = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    arr.push_back(data[i].real());
    arr.push_back(data[i].imag());
  }
  return arr;
}

Eigen::VectorXcd deinterleave(const json& arr) {
  if (!arr.is_array() || arr.size() % 2 != 0) {
    throw ValidationError("deinterleave: expected an even-length array");
  }
  Eigen::VectorXcd v(arr.size() / 2);
  for (std::size_t i = 0; i < v.size() * 2u; i += 2) {
    v(i / 2) = cplx(arr[i].get<double>(), arr[i + 1].get<double>());
  }
  return v;
}

}  // namespace

json wavefunction_to_json(const WaveFunction& psi) {
  const char* parity = psi.parity == Parity::Even ? "even" : psi.parity == Parity::Odd ? "odd" : "none";
  return json{{"grid", grid_to_json(psi.grid)},
              {"amp", interleave(psi.amp.data(), psi.amp.size())},
              {"parity", parity}};
}

WaveFunction wavefunction_from_json(const json& j) {
  const Grid1D grid = grid_from_json(j.at("grid"));
  Eigen::VectorXcd amp = deinterleave(j.at("amp"));
  const std::string p = j.value("parity", "none");
  Parity parity = p == "even" ? Parity::Even : p == "odd" ? Parity::Odd : Parity::None;
  return make_wavefunction(grid, std::move(amp), parity);
}

json kernel_to_json(const DensityKernel& rho) {
  json grids = json::array();
  for (const auto& g : rho.grids) grids.push_back(grid_to_json(g));
  // Row-major interleaved entries.
  const int n = rho.dim();
  json arr = json::array();
  for (int i = 0; i < n; ++i) {
    for (int j2 = 0; j2 < n; ++j2) {
      arr.push_back(rho.k(i, j2).real());
      arr.push_back(rho.k(i, j2).imag());
    }
  }
  return json{{"grids", grids}, {"k", arr}};
}

DensityKernel kernel_from_json(const json& j) {
  DensityKernel rho;
  for (const auto& g : j.at("grids")) rho.grids.push_back(grid_from_json(g));
  Eigen::VectorXcd flat = deinterleave(j.at("k"));
  long dim = 1;
  for (const auto& g : rho.grids) dim *= g.n;
  if (flat.size() != dim * dim) throw ValidationError("kernel_from_json: entry count mismatch");
  rho.k.resize(dim, dim);
  for (long i = 0; i < dim; ++i) {
    for (long j2 = 0; j2 < dim; ++j2) rho.k(i, j2) = flat(i * dim + j2);
  }
  return rho;
}

json events_to_json(const EventSet& events, bool include_bases) {
  json out;
  out["residual"] = events.residual;
  json evs = json::array();
  for (const auto& ev : events.events) {
    json e{{"probability", ev.probability},
           {"multiplicity", ev.multiplicity},
           {"eigenvalue", ev.eigenvalue}};
    if (include_bases && ev.basis.size() > 0) {
      json basis = json::array();
      for (int c = 0; c < ev.basis.cols(); ++c) {
        basis.push_back(interleave(ev.basis.col(c).data(), ev.basis.rows()));
      }
      e["basis"] = basis;
    }
    evs.push_back(std::move(e));
  }
  out["events"] = std::move(evs);
  return out;
}

json pmt_report_to_json(const PMTReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back(json{{"observable", r.name},
                        {"position_diagonal", r.position_diagonal},
                        {"with_decoherence", r.with_decoherence},
                        {"without_decoherence", r.without_decoherence},
                        {"discrepancy", r.discrepancy}});
  }
  return json{{"mass_ratio", rep.mass_ratio},
              {"max_diag_discrepancy", rep.max_diag_discrepancy},
              {"observables", std::move(rows)}};
}

json light_probe_report_to_json(const LightProbeReport& rep) {
  json sweep = json::array();
  for (const auto& p : rep.sweep) {
    sweep.push_back(json{{"mass_ratio", p.mass_ratio},
                         {"general_kernel_discrepancy", p.general_kernel_discrepancy},
                         {"scale", p.scale}});
  }
  return json{{"sweep", std::move(sweep)},
              {"reduced_model_discrepancy", rep.reduced_model_discrepancy}};
}

json penrose_report_to_json(const PenroseReport& rep) {
  json out;
  out["times"] = rep.times;
  out["gravity_overlap"] = rep.gravity_overlap;
  out["coherence"] = rep.coherence;
  out["d_max"] = rep.d_max;
  out["p_detector"] = rep.p_detector;
  out["p_source"] = rep.p_source;
  out["photon_mid"] = interleave(rep.photon_mid.data(), 4);
  out["photon_final"] = interleave(rep.photon_final.data(), 4);
  json matter = json::array();
  for (const auto& m : rep.rho_matter) matter.push_back(interleave(m.data(), 16));
  out["rho_matter"] = std::move(matter);
  return out;
}

json uncertainty_report_to_json(const UncertaintyReport& rep) {
  return json{{"dx2", rep.dx2},
              {"dp2_wouldbe", rep.dp2_wouldbe},
              {"dp2_physical", rep.dp2_physical},
              {"heisenberg_lhs", rep.heisenberg_lhs},
              {"modified_rhs", rep.modified_rhs},
              {"lambda_max", rep.lambda_max},
              {"alpha", rep.alpha}};
}

json timescale_report_to_json(const TimescaleReport& rep) {
  return json{{"ball_mass_planck", rep.ball_mass_planck},
              {"radius_cm", rep.radius_cm},
              {"a_cm2", rep.a_cm2},
              {"kappa_x2_target", rep.kappa_x2_target},
              {"s1_min", rep.s1_min},
              {"s1_final", rep.s1_final},
              {"t_seconds", rep.t_seconds},
              {"t_years", rep.t_years}};
}

std::string evolution_to_csv(const EvolutionResult& res) {
  std::ostringstream out;
  out << "t,S,S1,x2,min_eig\n";
  for (std::size_t i = 0; i < res.times.size(); ++i) {
    out << format_sci(res.times[i]) << ',' << format_sci(res.entropy[i]) << ','
        << format_sci(res.entropy_s1[i]) << ',' << format_sci(res.x2[i]) << ','
        << format_sci(res.min_eig[i]) << '\n';
  }
  return out.str();
}

std::string kernel_diagonal_to_csv(const DensityKernel& rho) {
  std::ostringstream out;
  out << "index,x,diagonal\n";
  const bool one_body = rho.bodies() == 1;
  for (int i = 0; i < rho.dim(); ++i) {
    out << i << ',';
    out << (one_body ? format_sci(rho.grids[0].x(i)) : std::string("-")) << ',';
    out << format_sci(rho.k(i, i).real()) << '\n';
  }
  return out.str();
}

std::string master_trajectory_to_csv(const MasterTrajectory& traj) {
  std::ostringstream out;
  out << "t,trace,S1\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    out << format_sci(traj.times[i]) << ',' << format_sci(traj.trace[i]) << ','
        << format_sci(traj.entropy_s1[i]) << '\n';
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open for writing: " + path);
  out << content;
  if (!out) throw NumericalError("failed writing: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gdqm
