#pragma once

#include <array>
#include <string_view>

namespace gdqm::cli {

inline constexpr std::array<std::string_view, 11> kSubcommands = {
    "dexp", "rho", "expect", "spectrum", "events", "evolve",
    "master", "penrose", "pmt", "estimate", "paper-check"};

struct OpMapping {
  std::string_view module;
  std::string_view operation;
  std::string_view subcommand;
};

/// Every library operation and the one subcommand that reaches it.
inline constexpr std::array<OpMapping, 40> kOperationRegistry = {{
    {"numerics", "integrate_semiinfinite", "dexp"},
    {"numerics", "hermitian_spectrum", "spectrum"},
    {"numerics", "schrodinger_propagate", "evolve"},
    {"decoherence", "alpha", "dexp"},
    {"decoherence", "dexp_exact", "dexp"},
    {"decoherence", "dexp_gaussian", "dexp"},
    {"decoherence", "dexp_log", "dexp"},
    {"decoherence", "dexp_auto", "dexp"},
    {"decoherence", "dexp_nbody_gaussian", "dexp"},
    {"decoherence", "dexp_nbody_log", "dexp"},
    {"decoherence", "planck_convert", "dexp"},
    {"states", "build_rho_gauss", "rho"},
    {"states", "build_rho_ball", "rho"},
    {"states", "build_rho_nbody", "rho"},
    {"states", "first_order_rho", "rho"},
    {"states", "expect", "expect"},
    {"states", "naive_p2_offset", "expect"},
    {"states", "expect_parity", "expect"},
    {"states", "uncertainty_report", "expect"},
    {"spectra", "perturb_diag_1d", "spectrum"},
    {"spectra", "general_first_eigenpair", "spectrum"},
    {"spectra", "perturb_diag_product", "spectrum"},
    {"spectra", "perturb_diag_3d", "spectrum"},
    {"spectra", "brute_force_events", "events"},
    {"spectra", "cat_exact_diag", "events"},
    {"spectra", "is_beable", "events"},
    {"spectra", "beable_expectation", "events"},
    {"dynamics", "evolve_mdm", "evolve"},
    {"dynamics", "entropy_S_S1", "evolve"},
    {"dynamics", "spread_fit", "evolve"},
    {"dynamics", "two_sided_check", "evolve"},
    {"dynamics", "integrate_master", "master"},
    {"dynamics", "positivity_probe", "master"},
    {"dynamics", "entropy_timescale_example", "estimate"},
    {"experiments", "pmt_run", "pmt"},
    {"experiments", "pmt_light_probe", "pmt"},
    {"experiments", "bead_ground_state", "pmt"},
    {"experiments", "penrose_run", "penrose"},
    {"experiments", "graviton_estimate", "estimate"},
    {"experiments", "photon_emission_estimate", "estimate"},
}};

}  // namespace gdqm::cli
