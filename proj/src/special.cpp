#include "tdho/special.hpp"

#include <cmath>
#include <string>

#include "tdho/errors.hpp"

namespace tdho {

namespace {
constexpr int kPolyGuard = 200;
}

double hermite(int n, double x) {
  require(n >= 0, ErrorCode::invalid_argument, "hermite: negative order");
  require(n <= kPolyGuard, ErrorCode::range_error,
          "hermite: order above guard " + std::to_string(kPolyGuard));
  if (n == 0) return 1.0;
  if (n == 1) return 2.0 * x;
  double hm2 = 1.0, hm1 = 2.0 * x, h = 0.0;
  for (int k = 2; k <= n; ++k) {
    h = 2.0 * x * hm1 - 2.0 * (k - 1) * hm2;
    hm2 = hm1;
    hm1 = h;
  }
  return h;
}

double hermite_weighted(int n, double x) {
  require(n >= 0, ErrorCode::invalid_argument, "hermite_weighted: negative order");
  require(n <= kPolyGuard, ErrorCode::range_error,
          "hermite_weighted: order above guard " + std::to_string(kPolyGuard));
  const double h0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
  if (n == 0) return h0;
  double hm2 = h0, hm1 = x * std::sqrt(2.0) * h0;
  if (n == 1) return hm1;
  double h = 0.0;
  for (int k = 2; k <= n; ++k) {
    h = x * std::sqrt(2.0 / k) * hm1 - std::sqrt((k - 1.0) / k) * hm2;
    hm2 = hm1;
    hm1 = h;
  }
  return h;
}

double laguerre(int n, double alpha, double x) {
  require(n >= 0, ErrorCode::invalid_argument, "laguerre: negative order");
  require(n <= kPolyGuard, ErrorCode::range_error,
          "laguerre: order above guard " + std::to_string(kPolyGuard));
  require(alpha > -1.0, ErrorCode::domain_error, "laguerre: alpha must exceed -1");
  if (n == 0) return 1.0;
  double lm2 = 1.0, lm1 = 1.0 + alpha - x, l = lm1;
  for (int k = 1; k < n; ++k) {
    l = ((2.0 * k + 1.0 + alpha - x) * lm1 - (k + alpha) * lm2) / (k + 1.0);
    lm2 = lm1;
    lm1 = l;
  }
  return l;
}

double log_gamma(double x) {
  require(x > 0.0, ErrorCode::domain_error, "log_gamma: argument must be positive");
  return std::lgamma(x);
}

QuadratureGrid build_grid(Domain domain, double x_max, int n_points) {
  require(x_max > 0.0, ErrorCode::invalid_argument, "build_grid: x_max must be positive");
  require(n_points >= 3, ErrorCode::invalid_argument, "build_grid: need at least 3 points");

  QuadratureGrid g;
  g.domain = domain;
  g.nodes.resize(n_points);
  g.weights.resize(n_points);

  if (domain == Domain::full_line) {
    g.dx = 2.0 * x_max / (n_points - 1);
    for (int i = 0; i < n_points; ++i) g.nodes[i] = -x_max + i * g.dx;
    for (int i = 0; i < n_points; ++i) g.weights[i] = g.dx;
    g.weights.front() = 0.5 * g.dx;
    g.weights.back() = 0.5 * g.dx;
  } else {
    g.dx = x_max / n_points;
    for (int i = 0; i < n_points; ++i) g.nodes[i] = (i + 1) * g.dx;
    // The [0, dx] panel closes with the known zero value at the origin, so
    // the first node carries a full weight.
    for (int i = 0; i < n_points; ++i) g.weights[i] = g.dx;
    g.weights.back() = 0.5 * g.dx;
  }
  return g;
}

double simpson_uniform(std::span<const double> f, double dx) {
  require(f.size() >= 3, ErrorCode::input_error, "simpson_uniform: need at least 3 samples");
  const std::size_t n = f.size();
  const std::size_t m = (n % 2 == 1) ? n : n - 1;  // odd count covered by Simpson
  double s = f[0] + f[m - 1];
  for (std::size_t i = 1; i + 1 < m; ++i) s += f[i] * ((i % 2 == 1) ? 4.0 : 2.0);
  s *= dx / 3.0;
  if (m != n) s += 0.5 * dx * (f[n - 2] + f[n - 1]);
  return s;
}

}  // namespace tdho
