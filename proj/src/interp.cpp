#include "tdho/interp.hpp"

#include <algorithm>
#include <cmath>

namespace tdho {

template <typename T>
CubicSpline<T>::CubicSpline(std::span<const double> x, std::span<const T> y) {
  require(x.size() == y.size(), ErrorCode::invalid_argument, "spline: size mismatch");
  require(x.size() >= 8, ErrorCode::invalid_argument, "spline: need at least 8 nodes");
  n_ = x.size();
  x0_ = x.front();
  h_ = (x.back() - x.front()) / static_cast<double>(n_ - 1);
  require(h_ > 0.0, ErrorCode::invalid_argument, "spline: nodes must ascend");
  for (std::size_t i = 1; i < n_; ++i) {
    require(std::abs(x[i] - (x0_ + h_ * i)) <= 1e-9 * h_ * n_, ErrorCode::invalid_argument,
            "spline: grid must be uniform");
  }
  y_.assign(y.begin(), y.end());
  sigma_.assign(n_, T{});

  // Second differences scaled by 6/h^2 form the right-hand side.
  const double inv_h2 = 1.0 / (h_ * h_);
  auto d2 = [&](std::size_t i) { return (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) * inv_h2; };

  // Not-a-knot on a uniform grid pins the first and last interior knots
  // directly, leaving a pure tridiagonal system in between.
  sigma_[1] = d2(1);
  sigma_[n_ - 2] = d2(n_ - 2);

  const std::size_t m = n_ - 4;  // unknowns sigma_[2 .. n_-3]
  if (m > 0) {
    std::vector<double> diag(m, 4.0);
    std::vector<T> rhs(m);
    for (std::size_t k = 0; k < m; ++k) rhs[k] = 6.0 * d2(k + 2);
    rhs[0] -= sigma_[1];
    rhs[m - 1] -= sigma_[n_ - 2];
    for (std::size_t k = 1; k < m; ++k) {
      const double w = 1.0 / diag[k - 1];
      diag[k] -= w;
      rhs[k] -= rhs[k - 1] * w;
    }
    sigma_[m + 1] = rhs[m - 1] / diag[m - 1];
    for (std::size_t k = m - 1; k-- > 0;) {
      sigma_[k + 2] = (rhs[k] - sigma_[k + 3]) / diag[k];
    }
  }

  sigma_[0] = 2.0 * sigma_[1] - sigma_[2];
  sigma_[n_ - 1] = 2.0 * sigma_[n_ - 2] - sigma_[n_ - 3];
}

template <typename T>
T CubicSpline<T>::eval(double x) const {
  double pos = (x - x0_) / h_;
  auto i = static_cast<std::ptrdiff_t>(std::floor(pos));
  i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(n_) - 2);
  const double a = pos - static_cast<double>(i);  // in [0,1] within the panel
  const double b = 1.0 - a;
  const double h2_6 = h_ * h_ / 6.0;
  return b * y_[i] + a * y_[i + 1] +
         h2_6 * ((b * b * b - b) * sigma_[i] + (a * a * a - a) * sigma_[i + 1]);
}

template class CubicSpline<double>;
template class CubicSpline<std::complex<double>>;

}  // namespace tdho
