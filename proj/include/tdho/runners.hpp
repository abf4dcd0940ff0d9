#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tdho/evolve.hpp"
#include "tdho/phase.hpp"
#include "tdho/scenario.hpp"

namespace tdho {

struct CheckRow {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  std::string cmp = "<=";  // "<=", ">=" or ">"
  bool pass = false;
};

struct VerifyReport {
  std::string scenario_name;
  std::uint64_t seed = 0;
  std::vector<CheckRow> checks;
  bool pass = false;
};

// Residual, orthonormality, invariance, composition, unitarity and
// oracle-fidelity suites for one scenario.
VerifyReport run_verify(const Scenario& sc, std::uint64_t seed);

struct PhaseModeRow {
  PhaseReport report;
  bool pass = false;
};

struct PhaseRunReport {
  std::string scenario_name;
  double declared_period = 0.0;
  bool periodic = false;
  double t_prime = 0.0;
  double periodicity_residual = 0.0;
  std::vector<PhaseModeRow> rows;
  bool pass = false;
};

PhaseRunReport run_phase(const Scenario& sc);

struct InvariantModeRow {
  std::string family;  // "I0" or "I_in"
  int n = 0;
  double expected = 0.0;
  double value_t0 = 0.0;
  double max_diag_deviation = 0.0;
  bool pass = false;
};

struct InvariantRunReport {
  std::string scenario_name;
  double offdiag_deviation_i0 = 0.0;
  double offdiag_deviation_i_in = 0.0;
  std::vector<InvariantModeRow> rows;
  bool pass = false;
};

InvariantRunReport run_invariant(const Scenario& sc);

struct EvolveModeSeries {
  int n = 0;
  std::vector<GridWavefunction> samples;
  std::vector<double> norms, mean_xs, var_xs, fidelity_vs_analytic;
};

struct EvolveRunReport {
  std::string scenario_name;
  std::string family;  // "psi0" (g = 0) or "phi" (g != 0)
  std::shared_ptr<const QuadratureGrid> grid;
  std::vector<double> times;
  std::vector<double> tau, rho;  // at the sampled times
  std::vector<EvolveModeSeries> modes;
};

// Crank-Nicolson evolution of every requested mode from its analytic state
// at t0, with per-sample moments and analytic fidelities.
EvolveRunReport run_evolve(const Scenario& sc);

}  // namespace tdho
