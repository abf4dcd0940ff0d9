#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "tdho/errors.hpp"

namespace tdho {

// Not-a-knot cubic spline on a uniform ascending grid.  Value type is real
// or complex; knot second derivatives come from one tridiagonal solve.
template <typename T>
class CubicSpline {
public:
  CubicSpline(std::span<const double> x, std::span<const T> y);

  bool in_range(double x) const { return x >= x0_ && x <= x0_ + h_ * (n_ - 1); }

  T eval(double x) const;

  // Values requested outside the grid are taken as zero (callers are
  // responsible for the support check).
  T eval_or_zero(double x) const { return in_range(x) ? eval(x) : T{}; }

private:
  double x0_ = 0.0, h_ = 1.0;
  std::size_t n_ = 0;
  std::vector<T> y_;
  std::vector<T> sigma_;  // second derivatives at knots
};

extern template class CubicSpline<double>;
extern template class CubicSpline<std::complex<double>>;

}  // namespace tdho
