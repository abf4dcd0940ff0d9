#include "tdho/phase.hpp"

#include <algorithm>
#include <cmath>

#include "tdho/errors.hpp"
#include "tdho/operators.hpp"
#include "tdho/special.hpp"

namespace tdho {

namespace {

struct RhoAt {
  double rho, drho;
};

RhoAt rho_generalized(const ClassicalTrajectory& traj, const OscillatorSpec& spec, double t) {
  const auto st = traj.at(t);
  const double m = spec.mass(t);
  require(m > 0.0, ErrorCode::domain_error, "mass profile must stay positive");
  const double dm = spec.mass.deriv(t);
  RhoAt r;
  r.rho = st.rho0 / std::sqrt(m);
  r.drho = st.drho0 / std::sqrt(m) - st.rho0 * dm / (2.0 * std::pow(m, 1.5));
  return r;
}

}  // namespace

std::optional<double> detect_period(const ClassicalTrajectory& traj, const OscillatorSpec& spec,
                                    double T, double* residual_out) {
  require(T > 0.0, ErrorCode::invalid_argument, "detect_period: T must be positive");
  const double span = traj.t1() - traj.t0();
  require(span >= 2.0 * T - 1e-12, ErrorCode::input_error,
          "detect_period: trajectory must span at least 2T");

  constexpr int kProbes = 512;
  constexpr double kTol = 1e-8;
  for (double t_prime : {T, 2.0 * T}) {
    if (span < 2.0 * t_prime - 1e-12) continue;
    double residual = 0.0;
    double rho_max = 0.0;
    for (int i = 0; i <= kProbes; ++i) {
      const double t = traj.t0() + t_prime * i / kProbes;
      const RhoAt now = rho_generalized(traj, spec, t);
      const RhoAt later = rho_generalized(traj, spec, t + t_prime);
      rho_max = std::max({rho_max, now.rho, later.rho});
      residual = std::max(residual, std::abs(later.rho - now.rho));
      residual = std::max(residual, std::abs(later.drho - now.drho));
    }
    residual /= rho_max;
    if (residual < kTol) {
      if (residual_out) *residual_out = residual;
      return t_prime;
    }
  }
  if (residual_out) *residual_out = -1.0;
  return std::nullopt;
}

double overall_phase(int n, double alpha, const ClassicalTrajectory& traj, double t_prime) {
  require(n >= 0 && alpha > 0.0, ErrorCode::invalid_argument, "overall_phase: bad mode label");
  const auto st = traj.at(traj.t0() + t_prime);
  return -(2.0 * n + alpha + 1.0) * st.tau;
}

PhaseReport geometric_phase(int n, const ClassicalTrajectory& traj, const OscillatorSpec& spec,
                            double t_prime, double periodicity_residual,
                            bool enforce_consistency) {
  spec.validate();
  const double alpha = alpha_of_g(spec.g, spec.hbar);
  const double order = 2.0 * n + alpha + 1.0;

  PhaseReport rep;
  rep.n = n;
  rep.alpha = alpha;
  rep.t_prime = t_prime;
  rep.periodicity_residual = periodicity_residual;
  rep.chi_n = overall_phase(n, alpha, traj, t_prime);

  // Classical route: (2n+alpha+1)/Omega0 * integral of M rho'^2 + 2 M a rho rho'.
  {
    constexpr int kSamples = 4097;
    std::vector<double> f(kSamples);
    const double dt = t_prime / (kSamples - 1);
    for (int i = 0; i < kSamples; ++i) {
      const double t = traj.t0() + i * dt;
      const RhoAt r = rho_generalized(traj, spec, t);
      const double m = spec.mass(t);
      const double a = spec.gauge(t);
      f[i] = m * r.drho * r.drho + 2.0 * m * a * r.rho * r.drho;
    }
    rep.gamma_n = order / traj.omega0 * simpson_uniform(f, dt);
  }

  // Definition route: chi_n + (1/hbar) integral <phi_n|H_in|phi_n> dt, with
  // the expectation values taken on grid states.
  {
    constexpr int kSamples = 513;
    const auto grid = make_shared_grid(suggest_grid_inverse_square(traj, spec, n));
    std::vector<double> f(kSamples);
    const double dt = t_prime / (kSamples - 1);
    for (int i = 0; i < kSamples; ++i) {
      const double t = traj.t0() + i * dt;
      const GridWavefunction state = phi(n, ClassicalSnapshot::at_time(traj, t, spec), spec, grid);
      const auto ham = HamiltonianSpec::at(spec, t, HamKind::h_in);
      f[i] = expectation(ham.coeffs(), state).value;
    }
    rep.dyn_n = simpson_uniform(f, dt) / spec.hbar;
    rep.gamma_expectation_route = rep.chi_n + rep.dyn_n;
  }

  rep.route_difference = std::abs(rep.gamma_n - rep.gamma_expectation_route);
  if (enforce_consistency) {
    require(rep.route_difference <= 1e-5, ErrorCode::consistency_error,
            "geometric_phase: integral and expectation routes disagree beyond 1e-5");
  }
  return rep;
}

}  // namespace tdho
