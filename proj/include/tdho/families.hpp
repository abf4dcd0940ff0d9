#pragma once

#include "tdho/classical.hpp"
#include "tdho/wavefunction.hpp"

namespace tdho {

enum class Family { sho, sho_inverse_square };

// Mode label: index n plus the inverse-square exponent alpha for the
// half-line family.
struct ModeSpec {
  int n = 0;
  double alpha = 0.0;
  Family family = Family::sho;

  // |alpha - alpha_of_g(g, hbar)| < 1e-12 for inverse-square modes.
  void validate(const OscillatorSpec& spec) const;
};

// alpha = sqrt(1 + 8 g / hbar^2) / 2, defined for g > -hbar^2/8.
double alpha_of_g(double g, double hbar);

// Unit-frequency oscillator eigenstate at clock time tau:
//   psi_n^s = (2^n n! sqrt(pi hbar))^{-1/2} e^{-i(n+1/2)tau}
//             e^{-x^2/2hbar} H_n(x/sqrt(hbar)).
// Norm is checked on full-line grids only (a half-line restriction of an
// odd mode is legitimate and carries norm 1/sqrt(2)).
GridWavefunction psi_s(int n, std::shared_ptr<const QuadratureGrid> grid, double tau,
                       double hbar);

// Half-line inverse-square eigenstate at clock time tau:
//   phi_n^s = (4/hbar)^{1/4} sqrt(Gamma(n+1)/Gamma(n+alpha+1))
//             e^{-i(2n+alpha+1)tau} (x^2/hbar)^{(2alpha+1)/4}
//             e^{-x^2/2hbar} L_n^alpha(x^2/hbar).
GridWavefunction phi_s(int n, double alpha, std::shared_ptr<const QuadratureGrid> grid,
                       double tau, double hbar);

// Snapshot of the classical data entering the closed-form families at one
// instant.  Normally read off a trajectory sample; exposed so tests can
// perturb individual entries.
struct ClassicalSnapshot {
  double t = 0.0;
  double rho0 = 1.0, drho0 = 0.0;
  double tau = 0.0;
  double u1 = 0.0, du1 = 0.0, delta = 0.0;
  double omega0 = 1.0;
  double theta0 = 0.0;

  static ClassicalSnapshot at_index(const ClassicalTrajectory& traj, std::size_t t_index);
  static ClassicalSnapshot at_time(const ClassicalTrajectory& traj, double t,
                                   const OscillatorSpec& spec);
};

// General time-dependent-frequency wavefunction psi_n^0(x, t) built from the
// classical snapshot.  The power ((u0-iv0)/rho0)^{n+1/2} is realized as the
// continuous branch e^{-i(n+1/2)(tau - theta0)}.
GridWavefunction psi_0(int n, const ClassicalSnapshot& s, const OscillatorSpec& spec,
                       std::shared_ptr<const QuadratureGrid> grid);
GridWavefunction psi_0(int n, const ClassicalTrajectory& traj, const OscillatorSpec& spec,
                       std::size_t t_index, std::shared_ptr<const QuadratureGrid> grid);

// Generalized inverse-square wavefunction phi_n(x, t) on the half line,
// using rho = rho0/sqrt(M) and the continuous branch for the
// (2n+alpha+1)-th power.
GridWavefunction phi(int n, const ClassicalSnapshot& s, const OscillatorSpec& spec,
                     std::shared_ptr<const QuadratureGrid> grid);
GridWavefunction phi(int n, const ClassicalTrajectory& traj, const OscillatorSpec& spec,
                     std::size_t t_index, std::shared_ptr<const QuadratureGrid> grid);

// Grid sizing: x_max covers the largest displacement plus 8 widths of the
// widest requested mode over the trajectory; dx resolves the narrowest
// ground width by a factor of points_per_width (default 40).
QuadratureGrid suggest_grid_sho(const ClassicalTrajectory& traj, const OscillatorSpec& spec,
                                int max_n, double margin = 1.0, int points_per_width = 40);
QuadratureGrid suggest_grid_inverse_square(const ClassicalTrajectory& traj,
                                           const OscillatorSpec& spec, int max_n,
                                           double margin = 1.0, int points_per_width = 40);

}  // namespace tdho
