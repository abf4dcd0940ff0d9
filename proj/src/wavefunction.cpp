#include "tdho/wavefunction.hpp"

#include <cmath>

#include "tdho/errors.hpp"

namespace tdho {

double GridWavefunction::norm_sq() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += grid->weights[i] * std::norm(values[i]);
  return s;
}

double GridWavefunction::norm() const { return std::sqrt(norm_sq()); }

Complex GridWavefunction::inner(const GridWavefunction& other) const {
  require(grid.get() == other.grid.get() || (grid->size() == other.grid->size() &&
                                             grid->x_min() == other.grid->x_min() &&
                                             grid->x_max() == other.grid->x_max()),
          ErrorCode::invalid_argument, "inner: states live on different grids");
  Complex s{};
  for (std::size_t i = 0; i < values.size(); ++i)
    s += grid->weights[i] * std::conj(values[i]) * other.values[i];
  return s;
}

double GridWavefunction::mean_x() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    s += grid->weights[i] * grid->nodes[i] * std::norm(values[i]);
  return s / norm_sq();
}

double GridWavefunction::moment_x2() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    s += grid->weights[i] * grid->nodes[i] * grid->nodes[i] * std::norm(values[i]);
  return s;
}

double GridWavefunction::var_x() const {
  const double m1 = mean_x();
  return moment_x2() / norm_sq() - m1 * m1;
}

double GridWavefunction::boundary_magnitude() const {
  if (grid->domain == Domain::half_line) return std::abs(values.back());
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

std::shared_ptr<const QuadratureGrid> make_shared_grid(QuadratureGrid grid) {
  return std::make_shared<const QuadratureGrid>(std::move(grid));
}

double fidelity(const GridWavefunction& a, const GridWavefunction& b) {
  const double na = a.norm(), nb = b.norm();
  require(na > 0.0 && nb > 0.0, ErrorCode::input_error, "fidelity: zero-norm state");
  return std::abs(a.inner(b)) / (na * nb);
}

}  // namespace tdho
