#pragma once

#include <array>
#include <memory>
#include <utility>
#include <vector>

#include "tdho/ode.hpp"
#include "tdho/profiles.hpp"

namespace tdho {

// Physical problem definition: frequency-squared profile w0^2(t), mass
// profile M(t) > 0, gauge coupling a(t), inverse-square coupling g, and the
// coefficients (c_u, c_v) that define the particular solution
// u1 = c_u*u0 + c_v*v0.
struct OscillatorSpec {
  Profile w0_sq = Profile::constant(1.0);
  Profile mass = Profile::constant(1.0);
  Profile gauge = Profile::constant(0.0);
  double g = 0.0;
  double hbar = 1.0;
  std::pair<double, double> u1_coeffs{0.0, 0.0};

  void validate() const;  // hbar > 0, g > -hbar^2/8 when used on the half line
};

// Two independent solutions of x'' + w0^2(t) x = 0 sampled on a uniform time
// grid, together with the Ermakov amplitude rho0 = sqrt(u0^2+v0^2), the
// reparametrized clock tau (d tau = Omega0/rho0^2 dt, tau(t0) = 0), and the
// particular-solution data u1, u1', delta_u1.
struct ClassicalTrajectory {
  std::vector<double> t_grid;
  std::vector<double> u0, du0, v0, dv0;
  std::vector<double> rho0, drho0;
  std::vector<double> tau;
  std::vector<double> u1, du1, delta_u1;
  double omega0 = 0.0;
  double theta0 = 0.0;  // arg(u0 - i v0) at t0; fixes the continuous phase branch

  double t0() const { return t_grid.front(); }
  double t1() const { return t_grid.back(); }
  double dt() const { return (t1() - t0()) / static_cast<double>(t_grid.size() - 1); }
  std::size_t size() const { return t_grid.size(); }

  // Dense interpolant of (u0, u0', v0, v0', tau, delta) from the adaptive
  // solve; accurate to integrator tolerance anywhere in the span.
  std::shared_ptr<const OdeSolution> dense;

  struct State {
    double u0, du0, v0, dv0, tau, delta;
    double rho0, drho0;
  };
  State at(double t) const;
};

struct SolveOptions {
  double rtol = 1e-12;
  double atol = 1e-14;
};

// Integrate the classical equation with ics = (u0, u0', v0, v0') at t0 and
// sample n_samples points uniformly on [t0, t1].  The Wronskian
// Omega0 = v0'u0 - u0'v0 must be nonzero (positive after orientation).
ClassicalTrajectory solve_linear(const OscillatorSpec& spec, double t0, double t1,
                                 const std::array<double, 4>& ics, int n_samples,
                                 const SolveOptions& opts = {});

// Omega0 evaluated through the mass-modified pair u = u0/sqrt(M),
// Omega0 = M(v'u - u'v); checks constancy along the grid (<= 1e-8 relative).
double wronskian(const ClassicalTrajectory& traj, const Profile& mass);

// Relative drift max_t |W(t) - W(t0)| / |W(t0)| of the plain Wronskian.
double wronskian_drift(const ClassicalTrajectory& traj);

// max_t |rho0'' + w0^2 rho0 - Omega0^2/rho0^3| with rho0'' from 4th-order
// differencing of the sampled drho0.
double ermakov_residual(const ClassicalTrajectory& traj, const OscillatorSpec& spec);

// The accumulated clock; checks rho0 > 0 and strict monotonicity.
std::vector<double> tau_of_t(const ClassicalTrajectory& traj);

// Accumulated phase of the displacement transform,
// delta' = w0^2 u1^2/2 - u1'^2/2, delta(t0) = 0.
std::vector<double> delta_u1(const ClassicalTrajectory& traj, const OscillatorSpec& spec);

}  // namespace tdho
