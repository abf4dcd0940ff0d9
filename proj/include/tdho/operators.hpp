#pragma once

#include <functional>
#include <span>
#include <vector>

#include "tdho/classical.hpp"
#include "tdho/families.hpp"
#include "tdho/wavefunction.hpp"

namespace tdho {

// Quadratic-form operator c_pp p^2 + c_xpx (xp+px) + c_xx x^2 + c_xinv2 x^-2
// applied on the grid: p by 4th-order differencing, x^2 and x^-2 pointwise,
// the symmetrized product as -i hbar (2x d/dx + 1).
struct OperatorCoeffs {
  double c_pp = 0.0;
  double c_xpx = 0.0;
  double c_xx = 0.0;
  double c_xinv2 = 0.0;
};

GridWavefunction apply_operator(const OperatorCoeffs& op, const GridWavefunction& psi);

enum class HamKind { h0, h_s, h_in, h_in_s };

// Parameter snapshot of one of the four Hamiltonians at a fixed time.  The
// effective spring constant c(t) is assembled from the profiles by
// construction: c = w0^2 + (sqrt M)''/sqrt(M) + 4a^2 - (2/M) d(Ma)/dt.
struct HamiltonianSpec {
  HamKind which = HamKind::h_s;
  double w0sq = 1.0;
  double mass = 1.0, dmass = 0.0;
  double a = 0.0;
  double c = 1.0;
  double g = 0.0;
  double hbar = 1.0;

  static HamiltonianSpec at(const OscillatorSpec& spec, double t, HamKind which);
  OperatorCoeffs coeffs() const;
};

// Exact invariant as a quadratic form.  family I0 assumes M = 1, a = 0,
// g = 0; I_in uses rho = rho0/sqrt(M) and its time derivative.
enum class InvariantFamily { i0, i_in };

struct QuadraticInvariant {
  InvariantFamily family = InvariantFamily::i0;
  double rho = 1.0;
  double drho = 0.0;  // d rho / dt at the evaluation time
  double omega0 = 1.0;
  double mass = 1.0;
  double a = 0.0;
  double g = 0.0;
  double hbar = 1.0;

  static QuadraticInvariant i0_at(const ClassicalTrajectory& traj, std::size_t t_index,
                                  double hbar);
  static QuadraticInvariant i_in_at(const ClassicalTrajectory& traj, const OscillatorSpec& spec,
                                    std::size_t t_index);
  OperatorCoeffs coeffs() const;
  double eigenvalue(int n, double alpha = 0.0) const;  // hbar(n+1/2) or hbar(2n+alpha+1)
};

struct ExpectationResult {
  double value = 0.0;      // Re <psi|Op|psi>
  double herm_imag = 0.0;  // Im part, Hermiticity diagnostic
};

ExpectationResult expectation(const OperatorCoeffs& op, const GridWavefunction& psi);

// max over interior samples of ||(-i hbar d/dt + H(t)) psi|| / ||H(t) psi||
// with the time derivative by central differences on the uniform sample
// sequence.
double schrodinger_residual(std::span<const GridWavefunction> states,
                            const std::function<HamiltonianSpec(double)>& ham);

// Matrix-element constancy of a time-indexed invariant over the supplied
// mode sets: max over t of |<m|I(t)|n>_t - <m|I(t0)|n>_t0|.
double invariance_check(const std::function<QuadraticInvariant(std::size_t)>& inv_at,
                        std::span<const std::vector<GridWavefunction>> states_per_time);

}  // namespace tdho
