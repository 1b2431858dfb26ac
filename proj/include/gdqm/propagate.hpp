#pragma once

#include "gdqm/hamiltonian.hpp"
#include "gdqm/states.hpp"

namespace gdqm {

struct PropagateOptions {
  /// Sub-step; 0 picks t/ceil(t/0.005).
  double dt = 0.0;
  double norm_drift_tol = 1e-6;
};

/// Crank-Nicolson (implicit midpoint) propagation of psi by time t. The
/// Cayley step is exactly unitary for the discrete H, so the norm is
/// preserved to rounding; a drift beyond the tolerance raises
/// PropagationUnstable.
WaveFunction schrodinger_propagate(const WaveFunction& psi, const HamiltonianSpec& h, double t,
                                   const PropagateOptions& opts = {});

}  // namespace gdqm
