#include "tdho/evolve.hpp"

#include <algorithm>
#include <cmath>

#include "tdho/errors.hpp"

namespace tdho {

namespace {

// Hermitian tridiagonal representation of a quadratic-form Hamiltonian with
// zero-Dirichlet walls just outside the grid.  The symmetrized product uses
// midpoint abscissae on the off-diagonals, which keeps the matrix Hermitian
// by construction.
struct Tridiag {
  std::vector<Complex> diag, sub, super;
};

Tridiag hamiltonian_matrix(const HamiltonianSpec& h, const QuadratureGrid& g) {
  const OperatorCoeffs op = h.coeffs();
  const std::size_t n = g.size();
  const double dx = g.dx;
  Tridiag m;
  m.diag.assign(n, Complex{});
  m.sub.assign(n, Complex{});
  m.super.assign(n, Complex{});

  const double kin = op.c_pp * h.hbar * h.hbar / (dx * dx);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = g.nodes[j];
    m.diag[j] += 2.0 * kin + op.c_xx * x * x;
    if (op.c_xinv2 != 0.0) m.diag[j] += op.c_xinv2 / (x * x);
    if (j + 1 < n) m.super[j] += -kin;
    if (j > 0) m.sub[j] += -kin;
  }
  if (op.c_xpx != 0.0) {
    const Complex f(0.0, -op.c_xpx * h.hbar);
    for (std::size_t j = 0; j < n; ++j) {
      if (j + 1 < n) m.super[j] += f * (g.nodes[j] + g.nodes[j + 1]) / (2.0 * dx);
      if (j > 0) m.sub[j] += -f * (g.nodes[j] + g.nodes[j - 1]) / (2.0 * dx);
    }
  }
  return m;
}

void thomas_solve(std::vector<Complex>& diag, const std::vector<Complex>& sub,
                  const std::vector<Complex>& super, std::vector<Complex>& rhs) {
  const std::size_t n = diag.size();
  for (std::size_t j = 1; j < n; ++j) {
    const Complex w = sub[j] / diag[j - 1];
    diag[j] -= w * super[j - 1];
    rhs[j] -= w * rhs[j - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (std::size_t j = n - 1; j-- > 0;) {
    rhs[j] = (rhs[j] - super[j] * rhs[j + 1]) / diag[j];
  }
}

}  // namespace

EvolutionResult evolve(const GridWavefunction& psi0,
                       const std::function<HamiltonianSpec(double)>& ham,
                       const EvolutionConfig& cfg) {
  require(cfg.dt > 0.0 && cfg.t1 > cfg.t0, ErrorCode::invalid_argument,
          "evolve: need dt > 0 and t1 > t0");
  const double span = cfg.t1 - cfg.t0;
  const auto n_steps = static_cast<std::size_t>(std::ceil(span / cfg.dt - 1e-9));
  const double dt = span / static_cast<double>(n_steps);
  const std::size_t n = psi0.size();

  EvolutionResult res;
  GridWavefunction psi = psi0;
  psi.t = cfg.t0;
  res.samples.push_back(psi);
  res.sample_times.push_back(cfg.t0);

  const double norm0 = psi.norm();
  require(norm0 > 0.0, ErrorCode::input_error, "evolve: zero-norm initial state");

  std::vector<Complex> a_diag(n), a_sub(n), a_super(n), rhs(n);
  for (std::size_t step = 0; step < n_steps; ++step) {
    const double t = cfg.t0 + dt * static_cast<double>(step);
    const Tridiag h = hamiltonian_matrix(ham(t + 0.5 * dt), *psi.grid);
    const Complex lam(0.0, 0.5 * dt / psi.hbar);

    // (1 + i dt H/2hbar) psi_next = (1 - i dt H/2hbar) psi
    for (std::size_t j = 0; j < n; ++j) {
      Complex b = (1.0 - lam * h.diag[j]) * psi.values[j];
      if (j > 0) b -= lam * h.sub[j] * psi.values[j - 1];
      if (j + 1 < n) b -= lam * h.super[j] * psi.values[j + 1];
      rhs[j] = b;
      a_diag[j] = 1.0 + lam * h.diag[j];
      a_sub[j] = lam * h.sub[j];
      a_super[j] = lam * h.super[j];
    }
    thomas_solve(a_diag, a_sub, a_super, rhs);
    psi.values = rhs;
    psi.t = cfg.t0 + dt * static_cast<double>(step + 1);

    res.max_norm_drift = std::max(res.max_norm_drift, std::abs(psi.norm() - norm0) / norm0);
    require(res.max_norm_drift <= 1e-6, ErrorCode::stability_error,
            "evolve: norm drift exceeded 1e-6");

    const bool keep = (cfg.store_every > 0 && (step + 1) % cfg.store_every == 0);
    if (keep && step + 1 < n_steps) {
      res.samples.push_back(psi);
      res.sample_times.push_back(psi.t);
    }
  }
  res.samples.push_back(psi);
  res.sample_times.push_back(psi.t);
  return res;
}

}  // namespace tdho
