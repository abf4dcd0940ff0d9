#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "tdho/special.hpp"

namespace tdho {

using Complex = std::complex<double>;

// Complex samples of psi(x, t) on a shared quadrature grid.  Value object:
// nothing mutates after construction, so states are safe to share across
// threads.
struct GridWavefunction {
  std::shared_ptr<const QuadratureGrid> grid;
  std::vector<Complex> values;
  double t = 0.0;
  double hbar = 1.0;

  std::size_t size() const { return values.size(); }

  double norm_sq() const;
  double norm() const;

  // <this|other> with the conjugate on this.
  Complex inner(const GridWavefunction& other) const;

  double mean_x() const;   // <x> for a normalized state
  double var_x() const;    // <x^2> - <x>^2
  double moment_x2() const;  // raw integral of x^2 |psi|^2

  double boundary_magnitude() const;  // max |psi| at the outer grid ends
};

std::shared_ptr<const QuadratureGrid> make_shared_grid(QuadratureGrid grid);

// |<a|b>| / (|a| |b|); phase-blind overlap.
double fidelity(const GridWavefunction& a, const GridWavefunction& b);

}  // namespace tdho
