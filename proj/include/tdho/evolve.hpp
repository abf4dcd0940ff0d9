#pragma once

#include <functional>
#include <vector>

#include "tdho/operators.hpp"
#include "tdho/wavefunction.hpp"

namespace tdho {

// Crank-Nicolson configuration: fixed theta = 1/2, zero-Dirichlet ends, the
// time-dependent Hamiltonian sampled at the half step.  Unconditionally
// stable; dt limits accuracy only.
struct EvolutionConfig {
  double dt = 1e-3;
  double t0 = 0.0;
  double t1 = 1.0;
  int store_every = 0;  // 0 = keep endpoints only
};

struct EvolutionResult {
  std::vector<GridWavefunction> samples;  // includes the initial and final states
  std::vector<double> sample_times;
  double max_norm_drift = 0.0;
};

// Brute-force integration of -i hbar d psi/dt + H(t) psi = 0 by the Cayley
// form; one complex tridiagonal solve per step.  Norm drift beyond 1e-6
// raises a stability error.
EvolutionResult evolve(const GridWavefunction& psi0,
                       const std::function<HamiltonianSpec(double)>& ham,
                       const EvolutionConfig& cfg);

}  // namespace tdho
