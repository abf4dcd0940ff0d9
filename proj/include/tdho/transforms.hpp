#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tdho/classical.hpp"
#include "tdho/wavefunction.hpp"

namespace tdho {

// Pointwise actions of the intertwining unitaries.  Each is a phase
// multiplication combined with a coordinate dilation or shift; resampling at
// the transformed abscissae uses a cubic spline.  The Gaussian-phase factor
// stands left of the dilation; the order is load-bearing because the two
// factors do not commute.

// (U psi)(x) = (omega^{1/4}/sqrt(rho)) exp(i drho x^2 / (2 hbar rho))
//              psi(sqrt(omega) x / rho)
GridWavefunction apply_U_w0(const GridWavefunction& psi, double rho, double drho, double omega);

// (U_f psi)(x) = exp[(i/hbar)(du1 x + delta)] psi(x - u1)
GridWavefunction apply_U_f(const GridWavefunction& psi, double u1, double du1, double delta);

// Same functional form as U_w0 with (rho_s, d rho_s/d tau, Omega_s).
GridWavefunction apply_U_s(const GridWavefunction& psi, double rho_s, double drho_s,
                           double omega_s);

// (U_g psi)(x) = M^{1/4} exp[(i/hbar)(M a - dM/4) x^2] psi(sqrt(M) x)
GridWavefunction apply_U_g(const GridWavefunction& psi, double mass, double dmass, double a);

// Unit-frequency auxiliary amplitude rho_s(tau) = sqrt(u_s^2 + v_s^2) built
// from u_s = cos(tau), v_s = omega_s sin(tau) + cross cos(tau); its Wronskian
// is omega_s by construction.
struct RhoSParams {
  double omega_s = 1.0;
  double cross = 0.0;

  double rho(double tau) const;
  double drho(double tau) const;  // derivative with respect to tau
  // max |rho'' + rho - omega_s^2/rho^3| on a sampled tau window.
  double residual(double tau_lo, double tau_hi, int n = 512) const;
};

// Max pointwise deviation over the supplied states and probe times of
//   U_w0(rho0, Omega0) U_s  vs  U_w0(rho0 rho_s, Omega0 Omega_s).
double check_composition_law(const ClassicalTrajectory& traj, const RhoSParams& rho_s,
                             std::span<const GridWavefunction> psi_set,
                             std::span<const double> probe_times);

}  // namespace tdho
