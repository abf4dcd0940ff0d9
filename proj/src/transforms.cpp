#include "tdho/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "tdho/errors.hpp"
#include "tdho/interp.hpp"

namespace tdho {

namespace {

constexpr double kSupportTol = 1e-10;

// Spline over the state, with the known zero value at the origin prepended
// for half-line grids so dilations may sample inside the first panel.
class StateSampler {
public:
  explicit StateSampler(const GridWavefunction& psi) : psi_(psi) {
    const auto& g = *psi.grid;
    if (g.domain == Domain::half_line) {
      nodes_.reserve(g.size() + 1);
      vals_.reserve(g.size() + 1);
      nodes_.push_back(0.0);
      vals_.push_back(Complex{});
      nodes_.insert(nodes_.end(), g.nodes.begin(), g.nodes.end());
      vals_.insert(vals_.end(), psi.values.begin(), psi.values.end());
    } else {
      nodes_.assign(g.nodes.begin(), g.nodes.end());
      vals_.assign(psi.values.begin(), psi.values.end());
    }
    spline_.emplace(std::span<const double>(nodes_), std::span<const Complex>(vals_));
  }

  Complex sample(double x) const {
    if (x < nodes_.front() || x > nodes_.back()) {
      // Unknown territory: acceptable only where the state has already
      // decayed at the matching boundary.
      const Complex edge = (x < nodes_.front()) ? vals_.front() : vals_.back();
      require(std::abs(edge) <= kSupportTol, ErrorCode::support_error,
              "transform samples outside the grid where the state is not negligible");
      return Complex{};
    }
    return spline_->eval(x);
  }

private:
  const GridWavefunction& psi_;
  std::vector<double> nodes_;
  std::vector<Complex> vals_;
  std::optional<CubicSpline<Complex>> spline_;
};

}  // namespace

GridWavefunction apply_U_w0(const GridWavefunction& psi, double rho, double drho, double omega) {
  require(rho > 0.0, ErrorCode::invalid_argument, "apply_U_w0: rho must be positive");
  require(omega > 0.0, ErrorCode::invalid_argument, "apply_U_w0: omega must be positive");
  StateSampler sampler(psi);

  GridWavefunction out = psi;
  const double scale = std::sqrt(omega) / rho;
  const double amp = std::pow(omega, 0.25) / std::sqrt(rho);
  const double phase_coeff = drho / (2.0 * psi.hbar * rho);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = psi.grid->nodes[i];
    out.values[i] =
        amp * std::exp(Complex(0.0, phase_coeff * x * x)) * sampler.sample(scale * x);
  }
  return out;
}

GridWavefunction apply_U_f(const GridWavefunction& psi, double u1, double du1, double delta) {
  require(psi.grid->domain == Domain::full_line, ErrorCode::domain_error,
          "apply_U_f: displacement needs a full-line grid");
  StateSampler sampler(psi);
  GridWavefunction out = psi;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = psi.grid->nodes[i];
    out.values[i] =
        std::exp(Complex(0.0, (du1 * x + delta) / psi.hbar)) * sampler.sample(x - u1);
  }
  return out;
}

GridWavefunction apply_U_s(const GridWavefunction& psi, double rho_s, double drho_s,
                           double omega_s) {
  return apply_U_w0(psi, rho_s, drho_s, omega_s);
}

GridWavefunction apply_U_g(const GridWavefunction& psi, double mass, double dmass, double a) {
  require(mass > 0.0, ErrorCode::invalid_argument, "apply_U_g: mass must be positive");
  StateSampler sampler(psi);
  GridWavefunction out = psi;
  const double scale = std::sqrt(mass);
  const double amp = std::pow(mass, 0.25);
  const double phase_coeff = (mass * a - 0.25 * dmass) / psi.hbar;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = psi.grid->nodes[i];
    out.values[i] =
        amp * std::exp(Complex(0.0, phase_coeff * x * x)) * sampler.sample(scale * x);
  }
  return out;
}

double RhoSParams::rho(double tau) const {
  const double u = std::cos(tau);
  const double v = omega_s * std::sin(tau) + cross * std::cos(tau);
  return std::hypot(u, v);
}

double RhoSParams::drho(double tau) const {
  const double u = std::cos(tau);
  const double v = omega_s * std::sin(tau) + cross * std::cos(tau);
  const double du = -std::sin(tau);
  const double dv = omega_s * std::cos(tau) - cross * std::sin(tau);
  return (u * du + v * dv) / std::hypot(u, v);
}

double RhoSParams::residual(double tau_lo, double tau_hi, int n) const {
  require(n >= 16 && tau_hi > tau_lo, ErrorCode::invalid_argument,
          "rho_s residual: bad sampling window");
  const double h = (tau_hi - tau_lo) / (n - 1);
  double worst = 0.0;
  for (int i = 1; i + 1 < n; ++i) {
    const double tau = tau_lo + i * h;
    const double d2 = (drho(tau + h) - drho(tau - h)) / (2.0 * h);
    const double r = rho(tau);
    worst = std::max(worst, std::abs(d2 + r - omega_s * omega_s / (r * r * r)));
  }
  return worst;
}

double check_composition_law(const ClassicalTrajectory& traj, const RhoSParams& rho_s,
                             std::span<const GridWavefunction> psi_set,
                             std::span<const double> probe_times) {
  require(!psi_set.empty() && !probe_times.empty(), ErrorCode::invalid_argument,
          "check_composition_law: empty inputs");
  require(rho_s.omega_s > 0.0, ErrorCode::invalid_argument,
          "check_composition_law: omega_s must be positive");
  require(rho_s.residual(0.0, 2.0 * M_PI) < 1e-6, ErrorCode::consistency_error,
          "check_composition_law: rho_s does not satisfy its auxiliary equation");

  double worst = 0.0;
  for (double t : probe_times) {
    const auto st = traj.at(t);
    const double rs = rho_s.rho(st.tau);
    const double drs = rho_s.drho(st.tau);
    for (const auto& psi : psi_set) {
      const GridWavefunction lhs =
          apply_U_w0(apply_U_s(psi, rs, drs, rho_s.omega_s), st.rho0, st.drho0, traj.omega0);
      // d/dt (rho0 rho_s(tau(t))) = drho0 rho_s + rho0 rho_s' Omega0/rho0^2.
      const double combined_drho = st.drho0 * rs + traj.omega0 * drs / st.rho0;
      const GridWavefunction rhs =
          apply_U_w0(psi, st.rho0 * rs, combined_drho, traj.omega0 * rho_s.omega_s);
      for (std::size_t i = 0; i < psi.size(); ++i) {
        worst = std::max(worst, std::abs(lhs.values[i] - rhs.values[i]));
      }
    }
  }
  return worst;
}

}  // namespace tdho
