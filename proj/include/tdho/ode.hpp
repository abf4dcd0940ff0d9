#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace tdho {

struct OdeOptions {
  double rtol = 1e-12;
  double atol = 1e-14;
  double initial_step = 0.0;  // 0 = choose automatically
  std::size_t max_steps = 20'000'000;
};

using OdeRhs = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

// Dense-output solution of y' = f(t, y) on [t0, t1], produced by the
// Dormand-Prince 5(4) embedded pair.  Evaluation between accepted steps uses
// the standard quartic interpolant, so sampled values carry the same accuracy
// as the step sequence itself.
class OdeSolution {
public:
  double t_begin() const { return t_begin_; }
  double t_end() const { return t_end_; }
  std::size_t dimension() const { return dim_; }
  std::size_t step_count() const { return segments_.size(); }

  void eval(double t, std::span<double> y_out) const;
  double eval_component(double t, std::size_t i) const;

private:
  struct Segment {
    double t0, h;
    std::vector<double> c0, c1, c2, c3, c4;  // dim entries each
  };

  std::size_t segment_index(double t) const;

  std::vector<Segment> segments_;
  std::size_t dim_ = 0;
  double t_begin_ = 0.0, t_end_ = 0.0;

  friend OdeSolution integrate(const OdeRhs&, std::span<const double>, double, double,
                               const OdeOptions&);
};

OdeSolution integrate(const OdeRhs& f, std::span<const double> y0, double t0, double t1,
                      const OdeOptions& opts = {});

}  // namespace tdho
