#include "tdho/families.hpp"

#include <algorithm>
#include <cmath>

#include "tdho/errors.hpp"

namespace tdho {

namespace {

constexpr double kSupportTol = 1e-10;
constexpr double kNormTol = 1e-8;

void check_adequacy(const GridWavefunction& w, bool check_norm) {
  require(w.boundary_magnitude() <= kSupportTol, ErrorCode::support_error,
          "wavefunction support reaches the grid boundary; enlarge x_max");
  if (check_norm) {
    require(std::abs(w.norm() - 1.0) <= kNormTol, ErrorCode::consistency_error,
            "wavefunction norm deviates from 1 beyond 1e-8; refine the grid");
  }
}

}  // namespace

double alpha_of_g(double g, double hbar) {
  require(hbar > 0.0, ErrorCode::invalid_argument, "alpha_of_g: hbar must be positive");
  require(g > -hbar * hbar / 8.0, ErrorCode::domain_error,
          "alpha_of_g: requires g > -hbar^2/8");
  return 0.5 * std::sqrt(1.0 + 8.0 * g / (hbar * hbar));
}

void ModeSpec::validate(const OscillatorSpec& spec) const {
  require(n >= 0, ErrorCode::invalid_argument, "mode index must be nonnegative");
  if (family == Family::sho_inverse_square) {
    require(std::abs(alpha - alpha_of_g(spec.g, spec.hbar)) < 1e-12, ErrorCode::consistency_error,
            "mode alpha inconsistent with the spec coupling g");
  }
}

ClassicalSnapshot ClassicalSnapshot::at_index(const ClassicalTrajectory& traj,
                                              std::size_t t_index) {
  require(t_index < traj.size(), ErrorCode::invalid_argument, "snapshot index out of range");
  ClassicalSnapshot s;
  s.t = traj.t_grid[t_index];
  s.rho0 = traj.rho0[t_index];
  s.drho0 = traj.drho0[t_index];
  s.tau = traj.tau[t_index];
  s.u1 = traj.u1[t_index];
  s.du1 = traj.du1[t_index];
  s.delta = traj.delta_u1[t_index];
  s.omega0 = traj.omega0;
  s.theta0 = traj.theta0;
  return s;
}

ClassicalSnapshot ClassicalSnapshot::at_time(const ClassicalTrajectory& traj, double t,
                                             const OscillatorSpec& spec) {
  const auto st = traj.at(t);
  ClassicalSnapshot s;
  s.t = t;
  s.rho0 = st.rho0;
  s.drho0 = st.drho0;
  s.tau = st.tau;
  s.delta = st.delta;
  s.u1 = spec.u1_coeffs.first * st.u0 + spec.u1_coeffs.second * st.v0;
  s.du1 = spec.u1_coeffs.first * st.du0 + spec.u1_coeffs.second * st.dv0;
  s.omega0 = traj.omega0;
  s.theta0 = traj.theta0;
  return s;
}

GridWavefunction psi_s(int n, std::shared_ptr<const QuadratureGrid> grid, double tau,
                       double hbar) {
  require(n >= 0, ErrorCode::invalid_argument, "psi_s: mode index must be nonnegative");
  require(hbar > 0.0, ErrorCode::invalid_argument, "psi_s: hbar must be positive");
  GridWavefunction w;
  w.grid = grid;
  w.hbar = hbar;
  w.t = tau;
  w.values.resize(grid->size());
  const double sqh = std::sqrt(hbar);
  const Complex phase = std::exp(Complex(0.0, -(n + 0.5) * tau));
  const double pref = std::pow(hbar, -0.25);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    w.values[i] = pref * hermite_weighted(n, grid->nodes[i] / sqh) * phase;
  }
  if (grid->domain == Domain::full_line) check_adequacy(w, true);
  return w;
}

GridWavefunction phi_s(int n, double alpha, std::shared_ptr<const QuadratureGrid> grid,
                       double tau, double hbar) {
  require(n >= 0, ErrorCode::invalid_argument, "phi_s: mode index must be nonnegative");
  require(alpha > 0.0, ErrorCode::invalid_argument, "phi_s: alpha must be positive");
  require(hbar > 0.0, ErrorCode::invalid_argument, "phi_s: hbar must be positive");
  require(grid->domain == Domain::half_line, ErrorCode::domain_error,
          "phi_s: inverse-square states live on the half line");
  GridWavefunction w;
  w.grid = grid;
  w.hbar = hbar;
  w.t = tau;
  w.values.resize(grid->size());
  const double lognorm = 0.5 * (log_gamma(n + 1.0) - log_gamma(n + alpha + 1.0));
  const double pref = std::pow(4.0 / hbar, 0.25) * std::exp(lognorm);
  const Complex phase = std::exp(Complex(0.0, -(2.0 * n + alpha + 1.0) * tau));
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double y = grid->nodes[i] * grid->nodes[i] / hbar;
    const double radial =
        std::exp(0.25 * (2.0 * alpha + 1.0) * std::log(y) - 0.5 * y) * laguerre(n, alpha, y);
    w.values[i] = pref * radial * phase;
  }
  check_adequacy(w, true);
  return w;
}

GridWavefunction psi_0(int n, const ClassicalSnapshot& s, const OscillatorSpec& spec,
                       std::shared_ptr<const QuadratureGrid> grid) {
  require(n >= 0, ErrorCode::invalid_argument, "psi_0: mode index must be nonnegative");
  require(grid->domain == Domain::full_line, ErrorCode::domain_error,
          "psi_0: SHO family lives on the full line");
  const double hbar = spec.hbar;
  GridWavefunction w;
  w.grid = grid;
  w.hbar = hbar;
  w.t = s.t;
  w.values.resize(grid->size());

  const double width_scale = std::sqrt(s.omega0 / hbar) / s.rho0;
  const double pref = std::pow(s.omega0 / hbar, 0.25) / std::sqrt(s.rho0);
  const Complex branch = std::exp(Complex(0.0, -(n + 0.5) * (s.tau - s.theta0)));
  const double gauss_phase = s.drho0 / (2.0 * hbar * s.rho0);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double x = grid->nodes[i];
    const double xs = x - s.u1;
    const double xi = width_scale * xs;
    const Complex local =
        std::exp(Complex(0.0, gauss_phase * xs * xs + (s.du1 * x + s.delta) / hbar));
    w.values[i] = pref * hermite_weighted(n, xi) * branch * local;
  }
  check_adequacy(w, true);
  return w;
}

GridWavefunction psi_0(int n, const ClassicalTrajectory& traj, const OscillatorSpec& spec,
                       std::size_t t_index, std::shared_ptr<const QuadratureGrid> grid) {
  return psi_0(n, ClassicalSnapshot::at_index(traj, t_index), spec, std::move(grid));
}

GridWavefunction phi(int n, const ClassicalSnapshot& s, const OscillatorSpec& spec,
                     std::shared_ptr<const QuadratureGrid> grid) {
  require(n >= 0, ErrorCode::invalid_argument, "phi: mode index must be nonnegative");
  require(grid->domain == Domain::half_line, ErrorCode::domain_error,
          "phi: inverse-square states live on the half line");
  const double hbar = spec.hbar;
  const double alpha = alpha_of_g(spec.g, hbar);
  const double m = spec.mass(s.t);
  require(m > 0.0, ErrorCode::domain_error, "phi: mass must be positive");
  const double dm = spec.mass.deriv(s.t);
  const double a = spec.gauge(s.t);

  const double rho = s.rho0 / std::sqrt(m);
  // M rho'/rho with rho = rho0/sqrt(M) reduces to M rho0'/rho0 - M'/2.
  const double m_drho_over_rho = m * s.drho0 / s.rho0 - 0.5 * dm;

  GridWavefunction w;
  w.grid = grid;
  w.hbar = hbar;
  w.t = s.t;
  w.values.resize(grid->size());

  const double lognorm = 0.5 * (log_gamma(n + 1.0) - log_gamma(n + alpha + 1.0));
  const double pref = std::pow(4.0 * s.omega0 / (hbar * rho * rho), 0.25) * std::exp(lognorm);
  const double order = 2.0 * n + alpha + 1.0;
  const Complex branch = std::exp(Complex(0.0, -order * (s.tau - s.theta0)));
  const double y_scale = s.omega0 / (hbar * rho * rho);
  const double phase_coeff = (m_drho_over_rho + 2.0 * m * a) / (2.0 * hbar);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double x = grid->nodes[i];
    const double y = y_scale * x * x;
    const double radial =
        std::exp(0.25 * (2.0 * alpha + 1.0) * std::log(y) - 0.5 * y) * laguerre(n, alpha, y);
    w.values[i] = pref * radial * branch * std::exp(Complex(0.0, phase_coeff * x * x));
  }
  check_adequacy(w, true);
  return w;
}

GridWavefunction phi(int n, const ClassicalTrajectory& traj, const OscillatorSpec& spec,
                     std::size_t t_index, std::shared_ptr<const QuadratureGrid> grid) {
  return phi(n, ClassicalSnapshot::at_index(traj, t_index), spec, std::move(grid));
}

namespace {

int grid_points(double x_span, double dx) {
  int n = static_cast<int>(std::ceil(x_span / dx)) + 1;
  return std::max(n, 64);
}

}  // namespace

QuadratureGrid suggest_grid_sho(const ClassicalTrajectory& traj, const OscillatorSpec& spec,
                                int max_n, double margin, int points_per_width) {
  double rho_max = 0.0, rho_min = 1e300, u1_max = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    rho_max = std::max(rho_max, traj.rho0[i]);
    rho_min = std::min(rho_min, traj.rho0[i]);
    u1_max = std::max(u1_max, std::abs(traj.u1[i]));
  }
  const double w0 = std::sqrt(spec.hbar / (2.0 * traj.omega0));
  const double width_max = rho_max * w0 * std::sqrt(2.0 * max_n + 1.0);
  const double x_max = margin * (u1_max + 8.0 * width_max);
  const double dx = rho_min * w0 / points_per_width;
  return build_grid(Domain::full_line, x_max, grid_points(2.0 * x_max, dx));
}

QuadratureGrid suggest_grid_inverse_square(const ClassicalTrajectory& traj,
                                           const OscillatorSpec& spec, int max_n, double margin,
                                           int points_per_width) {
  const double alpha = alpha_of_g(spec.g, spec.hbar);
  double rho_max = 0.0, rho_min = 1e300;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double m = spec.mass(traj.t_grid[i]);
    const double rho = traj.rho0[i] / std::sqrt(m);
    rho_max = std::max(rho_max, rho);
    rho_min = std::min(rho_min, rho);
  }
  const double scale = std::sqrt(spec.hbar / traj.omega0);
  const double y_max = 60.0 + 8.0 * (2.0 * max_n + alpha + 1.0);
  const double x_max = margin * rho_max * scale * std::sqrt(y_max);
  const double dx = rho_min * scale / std::sqrt(2.0) / points_per_width;
  return build_grid(Domain::half_line, x_max, grid_points(x_max, dx));
}

}  // namespace tdho
