#include "tdho/fd.hpp"

#include <array>
#include <cmath>

#include "tdho/errors.hpp"

namespace tdho {

std::vector<double> fd_weights(double x0, std::span<const double> nodes, int m) {
  const std::size_t n = nodes.size();
  require(m >= 0 && static_cast<std::size_t>(m) < n, ErrorCode::invalid_argument,
          "fd_weights: need more nodes than the derivative order");

  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  c[0][0] = 1.0;
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  for (std::size_t i = 1; i < n; ++i) {
    const int mn = static_cast<int>(std::min<std::size_t>(i, m));
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }

  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = c[j][m];
  return w;
}

namespace {

template <typename T>
void derivative_uniform_impl(std::span<const T> f, double dx, int m, std::span<T> out) {
  require(m == 1 || m == 2, ErrorCode::invalid_argument, "derivative_uniform: m must be 1 or 2");
  const std::size_t n = f.size();
  const std::size_t edge_width = (m == 1) ? 5 : 6;
  require(n >= edge_width + 2, ErrorCode::input_error, "derivative_uniform: grid too small");
  require(out.size() == n, ErrorCode::invalid_argument, "derivative_uniform: size mismatch");

  const double scale = (m == 1) ? 1.0 / (12.0 * dx) : 1.0 / (12.0 * dx * dx);
  const std::array<double, 5> center =
      (m == 1) ? std::array<double, 5>{1, -8, 0, 8, -1} : std::array<double, 5>{-1, 16, -30, 16, -1};

  for (std::size_t j = 2; j + 2 < n; ++j) {
    T acc{};
    for (std::size_t k = 0; k < 5; ++k) acc += center[k] * f[j - 2 + k];
    out[j] = acc * scale;
  }

  // Shifted stencils of the same order at the two points next to each end.
  std::vector<double> offs(edge_width);
  for (std::size_t k = 0; k < edge_width; ++k) offs[k] = static_cast<double>(k);
  const double hm = std::pow(dx, m);
  for (std::size_t j : {std::size_t{0}, std::size_t{1}}) {
    auto w = fd_weights(static_cast<double>(j), offs, m);
    T acc{};
    for (std::size_t k = 0; k < edge_width; ++k) acc += w[k] * f[k];
    out[j] = acc / hm;
  }
  for (std::size_t j : {n - 2, n - 1}) {
    const std::size_t base = n - edge_width;
    auto w = fd_weights(static_cast<double>(j - base), offs, m);
    T acc{};
    for (std::size_t k = 0; k < edge_width; ++k) acc += w[k] * f[base + k];
    out[j] = acc / hm;
  }
}

}  // namespace

void derivative_uniform(std::span<const double> f, double dx, int m, std::span<double> out) {
  derivative_uniform_impl<double>(f, dx, m, out);
}

void derivative_uniform(std::span<const std::complex<double>> f, double dx, int m,
                        std::span<std::complex<double>> out) {
  derivative_uniform_impl<std::complex<double>>(f, dx, m, out);
}

}  // namespace tdho
