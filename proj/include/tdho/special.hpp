#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tdho {

// Physicists' Hermite polynomial H_n(x), three-term recurrence.  Guarded at
// n <= 200; raw values overflow for large n at large |x|, use
// hermite_weighted for wavefunction work.
double hermite(int n, double x);

// exp(-x^2/2) * H_n(x) / sqrt(2^n n! sqrt(pi)) evaluated by the normalized
// recurrence, stable for all n in the guard range.
double hermite_weighted(int n, double x);

// Generalized Laguerre polynomial L_n^alpha(x), alpha > -1, n <= 200.
double laguerre(int n, double alpha, double x);

// log Gamma(x) for x > 0.
double log_gamma(double x);

enum class Domain { full_line, half_line };

// Uniform grid with trapezoid weights.  Half-line grids start at x = dx
// (never 0); integrands there are closed with the known zero value at the
// origin, which keeps the rule spectrally accurate for states vanishing at 0.
struct QuadratureGrid {
  Domain domain = Domain::full_line;
  std::vector<double> nodes;
  std::vector<double> weights;
  double dx = 0.0;

  std::size_t size() const { return nodes.size(); }
  double x_min() const { return nodes.front(); }
  double x_max() const { return nodes.back(); }
};

QuadratureGrid build_grid(Domain domain, double x_max, int n_points);

// Composite Simpson on uniformly sampled values (n odd preferred; a trailing
// trapezoid panel handles even n).
double simpson_uniform(std::span<const double> f, double dx);

}  // namespace tdho
