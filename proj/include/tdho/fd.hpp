#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tdho {

// Finite-difference weights for the m-th derivative at x0 over the given
// nodes (Fornberg's recursion).
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int m);

// 4th-order d^m/dx^m (m = 1 or 2) of values on a uniform grid.  Centered
// 5-point stencils in the interior, shifted one-sided stencils of matching
// order at the two points nearest each end.
void derivative_uniform(std::span<const double> f, double dx, int m, std::span<double> out);
void derivative_uniform(std::span<const std::complex<double>> f, double dx, int m,
                        std::span<std::complex<double>> out);

}  // namespace tdho
