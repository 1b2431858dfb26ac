#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "gdqm/dynamics.hpp"
#include "gdqm/experiments.hpp"

namespace gdqm {

using json = nlohmann::json;

/// Full-precision scientific rendering used by every CSV writer.
std::string format_sci(double v);

// Wave function schema: {"grid": {"x_min","x_max","n"}, "amp": interleaved
// [re0, im0, re1, im1, ...], "parity": "even"|"odd"|"none"}.
json wavefunction_to_json(const WaveFunction& psi);
WaveFunction wavefunction_from_json(const json& j);

// Kernel schema: {"grids": [grid...], "k": interleaved row-major entries}.
json kernel_to_json(const DensityKernel& rho);
DensityKernel kernel_from_json(const json& j);

json events_to_json(const EventSet& events, bool include_bases = false);
json pmt_report_to_json(const PMTReport& rep);
json light_probe_report_to_json(const LightProbeReport& rep);
json penrose_report_to_json(const PenroseReport& rep);
json uncertainty_report_to_json(const UncertaintyReport& rep);
json timescale_report_to_json(const TimescaleReport& rep);

std::string evolution_to_csv(const EvolutionResult& res);
std::string kernel_diagonal_to_csv(const DensityKernel& rho);
std::string master_trajectory_to_csv(const MasterTrajectory& traj);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace gdqm
