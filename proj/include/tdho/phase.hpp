#pragma once

#include <optional>

#include "tdho/classical.hpp"
#include "tdho/families.hpp"

namespace tdho {

// Phase bookkeeping for one phi_n mode over a detected period.
struct PhaseReport {
  int n = 0;
  double alpha = 0.0;
  double t_prime = 0.0;               // detected period (T or 2T)
  double chi_n = 0.0;                 // overall phase, -(2n+alpha+1) tau(T')
  double dyn_n = 0.0;                 // (1/hbar) integral of <H_in>
  double gamma_n = 0.0;               // geometric phase, classical integral route
  double gamma_expectation_route = 0.0;  // chi_n + dyn_n
  double route_difference = 0.0;
  double periodicity_residual = 0.0;
};

// Returns T' in {T, 2T} if rho = rho0/sqrt(M) and its time derivative repeat
// to 1e-8 relative over one candidate period, else nullopt.  The trajectory
// must span at least 2T (and 4T to certify T' = 2T).
std::optional<double> detect_period(const ClassicalTrajectory& traj, const OscillatorSpec& spec,
                                    double T, double* residual_out = nullptr);

// chi_n = -(2n+alpha+1) tau(t0+T').
double overall_phase(int n, double alpha, const ClassicalTrajectory& traj, double t_prime);

// gamma_n = (2n+alpha+1) (1/Omega0) integral_0^T' (M rho'^2 + 2 M a rho rho') dt,
// cross-checked against chi_n + (1/hbar) integral <phi_n|H_in|phi_n> dt.
// Disagreement beyond 1e-5 raises a consistency error unless
// enforce_consistency is cleared (reporting callers flag it themselves).
PhaseReport geometric_phase(int n, const ClassicalTrajectory& traj, const OscillatorSpec& spec,
                            double t_prime, double periodicity_residual = 0.0,
                            bool enforce_consistency = true);

}  // namespace tdho
