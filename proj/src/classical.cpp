#include "tdho/classical.hpp"

#include <cmath>
#include <string>

#include "tdho/errors.hpp"
#include "tdho/fd.hpp"

namespace tdho {

void OscillatorSpec::validate() const {
  require(hbar > 0.0, ErrorCode::invalid_argument, "spec: hbar must be positive");
  require(g > -hbar * hbar / 8.0, ErrorCode::domain_error,
          "spec: inverse-square coupling must satisfy g > -hbar^2/8");
}

ClassicalTrajectory::State ClassicalTrajectory::at(double t) const {
  require(static_cast<bool>(dense), ErrorCode::input_error, "trajectory has no dense output");
  std::array<double, 6> y{};
  dense->eval(t, y);
  State s{};
  s.u0 = y[0];
  s.du0 = y[1];
  s.v0 = y[2];
  s.dv0 = y[3];
  s.tau = y[4];
  s.delta = y[5];
  s.rho0 = std::hypot(s.u0, s.v0);
  s.drho0 = (s.u0 * s.du0 + s.v0 * s.dv0) / s.rho0;
  return s;
}

ClassicalTrajectory solve_linear(const OscillatorSpec& spec, double t0, double t1,
                                 const std::array<double, 4>& ics, int n_samples,
                                 const SolveOptions& opts) {
  require(n_samples >= 2, ErrorCode::invalid_argument, "solve_linear: need at least 2 samples");
  require(std::isfinite(t0) && std::isfinite(t1) && t1 > t0, ErrorCode::invalid_argument,
          "solve_linear: invalid time span");
  spec.validate();

  const double omega0 = ics[3] * ics[0] - ics[1] * ics[2];
  require(std::abs(omega0) > 1e-14 * (1.0 + std::abs(ics[0]) + std::abs(ics[2])),
          ErrorCode::degenerate_solution,
          "solve_linear: initial conditions have zero Wronskian (dependent solutions)");
  require(omega0 > 0.0, ErrorCode::degenerate_solution,
          "solve_linear: Wronskian must be positive (swap or negate one solution)");

  const double cu = spec.u1_coeffs.first;
  const double cv = spec.u1_coeffs.second;

  // State: (u0, u0', v0, v0', tau, delta_u1).  tau and delta ride along the
  // adaptive solve, which realizes their integrals at integrator accuracy.
  OdeRhs rhs = [&spec, omega0, cu, cv](double t, std::span<const double> y,
                                       std::span<double> dy) {
    const double w2 = spec.w0_sq(t);
    dy[0] = y[1];
    dy[1] = -w2 * y[0];
    dy[2] = y[3];
    dy[3] = -w2 * y[2];
    dy[4] = omega0 / (y[0] * y[0] + y[2] * y[2]);
    const double u1 = cu * y[0] + cv * y[2];
    const double du1 = cu * y[1] + cv * y[3];
    dy[5] = 0.5 * w2 * u1 * u1 - 0.5 * du1 * du1;
  };

  const std::array<double, 6> y0{ics[0], ics[1], ics[2], ics[3], 0.0, 0.0};
  OdeOptions oopts;
  oopts.rtol = opts.rtol;
  oopts.atol = opts.atol;
  auto sol = std::make_shared<OdeSolution>(integrate(rhs, y0, t0, t1, oopts));

  ClassicalTrajectory traj;
  traj.omega0 = omega0;
  traj.theta0 = std::atan2(-ics[2], ics[0]);
  traj.dense = sol;
  traj.t_grid.resize(n_samples);
  traj.u0.resize(n_samples);
  traj.du0.resize(n_samples);
  traj.v0.resize(n_samples);
  traj.dv0.resize(n_samples);
  traj.rho0.resize(n_samples);
  traj.drho0.resize(n_samples);
  traj.tau.resize(n_samples);
  traj.u1.resize(n_samples);
  traj.du1.resize(n_samples);
  traj.delta_u1.resize(n_samples);

  const double dt = (t1 - t0) / static_cast<double>(n_samples - 1);
  std::array<double, 6> y{};
  for (int i = 0; i < n_samples; ++i) {
    const double t = (i == n_samples - 1) ? t1 : t0 + i * dt;
    sol->eval(t, y);
    traj.t_grid[i] = t;
    traj.u0[i] = y[0];
    traj.du0[i] = y[1];
    traj.v0[i] = y[2];
    traj.dv0[i] = y[3];
    traj.tau[i] = y[4];
    traj.delta_u1[i] = y[5];
    const double rho = std::hypot(y[0], y[2]);
    require(rho > 0.0, ErrorCode::degenerate_solution, "solve_linear: rho0 vanished on the grid");
    traj.rho0[i] = rho;
    traj.drho0[i] = (y[0] * y[1] + y[2] * y[3]) / rho;
    traj.u1[i] = cu * y[0] + cv * y[2];
    traj.du1[i] = cu * y[1] + cv * y[3];
  }
  return traj;
}

double wronskian_drift(const ClassicalTrajectory& traj) {
  const double w0 = traj.dv0.front() * traj.u0.front() - traj.du0.front() * traj.v0.front();
  double drift = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double w = traj.dv0[i] * traj.u0[i] - traj.du0[i] * traj.v0[i];
    drift = std::max(drift, std::abs(w - w0));
  }
  return drift / std::abs(w0);
}

double wronskian(const ClassicalTrajectory& traj, const Profile& mass) {
  require(traj.size() >= 2, ErrorCode::input_error, "wronskian: empty trajectory");
  double w_first = 0.0, drift = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double t = traj.t_grid[i];
    const double m = mass(t);
    require(m > 0.0, ErrorCode::domain_error, "wronskian: mass profile must be positive");
    const double s = std::sqrt(m);
    const double dm = mass.deriv(t);
    const double u = traj.u0[i] / s;
    const double v = traj.v0[i] / s;
    const double du = traj.du0[i] / s - traj.u0[i] * dm / (2.0 * m * s);
    const double dv = traj.dv0[i] / s - traj.v0[i] * dm / (2.0 * m * s);
    const double w = m * (dv * u - du * v);
    if (i == 0) w_first = w;
    drift = std::max(drift, std::abs(w - w_first));
  }
  require(drift / std::abs(w_first) <= 1e-8, ErrorCode::consistency_error,
          "wronskian: drifted beyond 1e-8 relative along the grid");
  return w_first;
}

double ermakov_residual(const ClassicalTrajectory& traj, const OscillatorSpec& spec) {
  const std::size_t n = traj.size();
  require(n >= 8, ErrorCode::input_error, "ermakov_residual: too few samples");
  std::vector<double> d2rho(n);
  derivative_uniform(std::span<const double>(traj.drho0), traj.dt(), 1, d2rho);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double rho = traj.rho0[i];
    const double r = d2rho[i] + spec.w0_sq(traj.t_grid[i]) * rho -
                     traj.omega0 * traj.omega0 / (rho * rho * rho);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

std::vector<double> tau_of_t(const ClassicalTrajectory& traj) {
  for (std::size_t i = 0; i < traj.size(); ++i) {
    require(traj.rho0[i] > 0.0, ErrorCode::domain_error, "tau_of_t: nonpositive rho0 sample");
  }
  for (std::size_t i = 1; i < traj.size(); ++i) {
    require(traj.tau[i] > traj.tau[i - 1], ErrorCode::consistency_error,
            "tau_of_t: clock is not strictly increasing");
  }
  return traj.tau;
}

std::vector<double> delta_u1(const ClassicalTrajectory& traj, const OscillatorSpec& spec) {
  (void)spec;
  return traj.delta_u1;
}

}  // namespace tdho
