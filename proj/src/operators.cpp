#include "tdho/operators.hpp"

#include <algorithm>
#include <cmath>

#include "tdho/errors.hpp"
#include "tdho/fd.hpp"

namespace tdho {

HamiltonianSpec HamiltonianSpec::at(const OscillatorSpec& spec, double t, HamKind which) {
  HamiltonianSpec h;
  h.which = which;
  h.hbar = spec.hbar;
  h.g = spec.g;
  h.w0sq = spec.w0_sq(t);
  if (which == HamKind::h_in) {
    const double m = spec.mass(t);
    require(m > 0.0, ErrorCode::domain_error, "hamiltonian: mass must be positive");
    const double dm = spec.mass.deriv(t);
    const double d2m = spec.mass.deriv2(t);
    const double a = spec.gauge(t);
    const double da = spec.gauge.deriv(t);
    h.mass = m;
    h.dmass = dm;
    h.a = a;
    // (sqrt M)''/sqrt(M) = M''/2M - M'^2/4M^2
    const double sm = d2m / (2.0 * m) - dm * dm / (4.0 * m * m);
    h.c = h.w0sq + sm + 4.0 * a * a - (2.0 / m) * (dm * a + m * da);
  } else {
    h.c = h.w0sq;
  }
  return h;
}

OperatorCoeffs HamiltonianSpec::coeffs() const {
  OperatorCoeffs op;
  switch (which) {
    case HamKind::h0:
      op.c_pp = 0.5;
      op.c_xx = 0.5 * w0sq;
      break;
    case HamKind::h_s:
      op.c_pp = 0.5;
      op.c_xx = 0.5;
      break;
    case HamKind::h_in_s:
      op.c_pp = 0.5;
      op.c_xx = 0.5;
      op.c_xinv2 = g;
      break;
    case HamKind::h_in:
      op.c_pp = 0.5 / mass;
      op.c_xpx = -a;
      op.c_xx = 0.5 * mass * c;
      op.c_xinv2 = g / mass;
      break;
  }
  return op;
}

QuadraticInvariant QuadraticInvariant::i0_at(const ClassicalTrajectory& traj,
                                             std::size_t t_index, double hbar) {
  require(t_index < traj.size(), ErrorCode::invalid_argument, "invariant index out of range");
  QuadraticInvariant inv;
  inv.family = InvariantFamily::i0;
  inv.rho = traj.rho0[t_index];
  inv.drho = traj.drho0[t_index];
  inv.omega0 = traj.omega0;
  inv.hbar = hbar;
  return inv;
}

QuadraticInvariant QuadraticInvariant::i_in_at(const ClassicalTrajectory& traj,
                                               const OscillatorSpec& spec, std::size_t t_index) {
  require(t_index < traj.size(), ErrorCode::invalid_argument, "invariant index out of range");
  const double t = traj.t_grid[t_index];
  const double m = spec.mass(t);
  require(m > 0.0, ErrorCode::domain_error, "invariant: mass must be positive");
  const double dm = spec.mass.deriv(t);
  QuadraticInvariant inv;
  inv.family = InvariantFamily::i_in;
  inv.mass = m;
  inv.a = spec.gauge(t);
  inv.g = spec.g;
  inv.hbar = spec.hbar;
  inv.omega0 = traj.omega0;
  inv.rho = traj.rho0[t_index] / std::sqrt(m);
  inv.drho = traj.drho0[t_index] / std::sqrt(m) -
             traj.rho0[t_index] * dm / (2.0 * std::pow(m, 1.5));
  return inv;
}

OperatorCoeffs QuadraticInvariant::coeffs() const {
  require(rho > 0.0, ErrorCode::invalid_argument, "invariant: rho must be positive");
  OperatorCoeffs op;
  const double beta = mass * drho + 2.0 * mass * a * rho;
  op.c_pp = rho * rho / (2.0 * omega0);
  op.c_xpx = -rho * beta / (2.0 * omega0);
  op.c_xx = (beta * beta + omega0 * omega0 / (rho * rho)) / (2.0 * omega0);
  op.c_xinv2 = g * rho * rho / omega0;
  return op;
}

double QuadraticInvariant::eigenvalue(int n, double alpha) const {
  if (family == InvariantFamily::i0) return hbar * (n + 0.5);
  return hbar * (2.0 * n + alpha + 1.0);
}

GridWavefunction apply_operator(const OperatorCoeffs& op, const GridWavefunction& psi) {
  const auto& g = *psi.grid;
  const std::size_t n = psi.size();
  require(n >= 8, ErrorCode::input_error, "apply_operator: grid too small");
  if (op.c_xinv2 != 0.0) {
    require(g.domain == Domain::half_line, ErrorCode::domain_error,
            "apply_operator: x^-2 term needs a half-line grid");
  }

  GridWavefunction out = psi;
  std::fill(out.values.begin(), out.values.end(), Complex{});

  const double hbar = psi.hbar;
  std::vector<Complex> buf(n);
  if (op.c_pp != 0.0) {
    derivative_uniform(std::span<const Complex>(psi.values), g.dx, 2, buf);
    const double f = -op.c_pp * hbar * hbar;
    for (std::size_t i = 0; i < n; ++i) out.values[i] += f * buf[i];
  }
  if (op.c_xpx != 0.0) {
    derivative_uniform(std::span<const Complex>(psi.values), g.dx, 1, buf);
    const Complex f(0.0, -op.c_xpx * hbar);
    for (std::size_t i = 0; i < n; ++i)
      out.values[i] += f * (2.0 * g.nodes[i] * buf[i] + psi.values[i]);
  }
  if (op.c_xx != 0.0) {
    for (std::size_t i = 0; i < n; ++i)
      out.values[i] += op.c_xx * g.nodes[i] * g.nodes[i] * psi.values[i];
  }
  if (op.c_xinv2 != 0.0) {
    for (std::size_t i = 0; i < n; ++i)
      out.values[i] += op.c_xinv2 / (g.nodes[i] * g.nodes[i]) * psi.values[i];
  }
  return out;
}

ExpectationResult expectation(const OperatorCoeffs& op, const GridWavefunction& psi) {
  const GridWavefunction image = apply_operator(op, psi);
  const Complex v = psi.inner(image);
  return {v.real(), v.imag()};
}

double schrodinger_residual(std::span<const GridWavefunction> states,
                            const std::function<HamiltonianSpec(double)>& ham) {
  require(states.size() >= 3, ErrorCode::input_error,
          "schrodinger_residual: need at least 3 time samples");
  const double dt = states[1].t - states[0].t;
  require(dt > 0.0, ErrorCode::input_error, "schrodinger_residual: samples must ascend in t");
  for (std::size_t k = 1; k + 1 < states.size(); ++k) {
    require(std::abs((states[k + 1].t - states[k].t) - dt) <= 1e-9 * dt, ErrorCode::input_error,
            "schrodinger_residual: sample times must be uniform");
  }

  const double hbar = states[0].hbar;
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < states.size(); ++k) {
    const GridWavefunction h_psi = apply_operator(ham(states[k].t).coeffs(), states[k]);
    double num = 0.0, den = 0.0;
    const auto& w = states[k].grid->weights;
    for (std::size_t i = 0; i < states[k].size(); ++i) {
      const Complex dpsi_dt = (states[k + 1].values[i] - states[k - 1].values[i]) / (2.0 * dt);
      const Complex r = Complex(0.0, -hbar) * dpsi_dt + h_psi.values[i];
      num += w[i] * std::norm(r);
      den += w[i] * std::norm(h_psi.values[i]);
    }
    require(den > 0.0, ErrorCode::input_error, "schrodinger_residual: H psi vanished");
    worst = std::max(worst, std::sqrt(num / den));
  }
  return worst;
}

double invariance_check(const std::function<QuadraticInvariant(std::size_t)>& inv_at,
                        std::span<const std::vector<GridWavefunction>> states_per_time) {
  require(states_per_time.size() >= 2, ErrorCode::input_error,
          "invariance_check: need at least two time samples");
  const std::size_t n_modes = states_per_time[0].size();
  require(n_modes >= 1, ErrorCode::input_error, "invariance_check: empty mode set");

  std::vector<std::vector<Complex>> g0(n_modes, std::vector<Complex>(n_modes));
  double worst = 0.0;
  for (std::size_t k = 0; k < states_per_time.size(); ++k) {
    const auto& modes = states_per_time[k];
    require(modes.size() == n_modes, ErrorCode::input_error,
            "invariance_check: ragged mode sets");
    const OperatorCoeffs op = inv_at(k).coeffs();
    std::vector<GridWavefunction> images;
    images.reserve(n_modes);
    for (const auto& m : modes) images.push_back(apply_operator(op, m));
    for (std::size_t a = 0; a < n_modes; ++a) {
      for (std::size_t b = 0; b < n_modes; ++b) {
        const Complex e = modes[a].inner(images[b]);
        if (k == 0)
          g0[a][b] = e;
        else
          worst = std::max(worst, std::abs(e - g0[a][b]));
      }
    }
  }
  return worst;
}

}  // namespace tdho
