#include "tdho/ode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tdho/errors.hpp"

namespace tdho {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;

// Error weights (5th order minus embedded 4th order solution).
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

// Dense-output weights.
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

}  // namespace

std::size_t OdeSolution::segment_index(double t) const {
  // Segments are contiguous and ordered; binary search on start times.
  std::size_t lo = 0, hi = segments_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (segments_[mid].t0 <= t)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

void OdeSolution::eval(double t, std::span<double> y_out) const {
  require(!segments_.empty(), ErrorCode::input_error, "ode solution is empty");
  const double slack = 1e-9 * (1.0 + std::abs(t_end_ - t_begin_));
  require(t >= t_begin_ - slack && t <= t_end_ + slack, ErrorCode::input_error,
          "ode evaluation time outside integration span");
  t = std::clamp(t, t_begin_, t_end_);
  const Segment& s = segments_[segment_index(t)];
  const double th = (t - s.t0) / s.h;
  const double th1 = 1.0 - th;
  for (std::size_t i = 0; i < dim_; ++i) {
    y_out[i] = s.c0[i] + th * (s.c1[i] + th1 * (s.c2[i] + th * (s.c3[i] + th1 * s.c4[i])));
  }
}

double OdeSolution::eval_component(double t, std::size_t i) const {
  std::vector<double> buf(dim_);
  eval(t, buf);
  return buf[i];
}

OdeSolution integrate(const OdeRhs& f, std::span<const double> y0, double t0, double t1,
                      const OdeOptions& opts) {
  require(t1 > t0, ErrorCode::invalid_argument, "integration span must have t1 > t0");
  require(!y0.empty(), ErrorCode::invalid_argument, "empty state vector");
  const std::size_t n = y0.size();
  const double span = t1 - t0;

  std::vector<double> y(y0.begin(), y0.end());
  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n);

  auto rhs = [&](double t, const std::vector<double>& yy, std::vector<double>& out) {
    f(t, yy, out);
    for (double v : out) {
      require(std::isfinite(v), ErrorCode::integration_failure,
              "non-finite derivative at t=" + std::to_string(t));
    }
  };

  double t = t0;
  rhs(t, y, k1);

  // Initial step: conservative heuristic based on the scale of y and y'.
  double h = opts.initial_step;
  if (h <= 0.0) {
    double ny = 0.0, nf = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double sc = opts.atol + opts.rtol * std::abs(y[i]);
      ny = std::max(ny, std::abs(y[i]) / sc);
      nf = std::max(nf, std::abs(k1[i]) / sc);
    }
    h = (nf > 0.0) ? 0.01 * ny / nf : span / 100.0;
    h = std::clamp(h, span * 1e-10, span / 10.0);
    if (h == 0.0) h = span / 100.0;
  }

  OdeSolution sol;
  sol.dim_ = n;
  sol.t_begin_ = t0;
  sol.t_end_ = t1;

  std::size_t steps = 0;
  bool last = false;
  while (!last) {
    require(++steps <= opts.max_steps, ErrorCode::integration_failure,
            "step budget exhausted at t=" + std::to_string(t));
    require(t + h > t, ErrorCode::integration_failure,
            "step size underflow at t=" + std::to_string(t));
    if (t + h >= t1) {
      h = t1 - t;
      last = true;
    }

    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    rhs(t + c2 * h, ytmp, k2);
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, ytmp, k3);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, ytmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * h, ytmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    rhs(t + h, ytmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    rhs(t + h, ynew, k7);  // FSAL

    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ei =
          h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double r = ei / sc;
      err += r * r;
    }
    err = std::sqrt(err / static_cast<double>(n));

    if (err <= 1.0) {
      OdeSolution::Segment seg;
      seg.t0 = t;
      seg.h = h;
      seg.c0.resize(n);
      seg.c1.resize(n);
      seg.c2.resize(n);
      seg.c3.resize(n);
      seg.c4.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double dy = ynew[i] - y[i];
        const double bspl = h * k1[i] - dy;
        seg.c0[i] = y[i];
        seg.c1[i] = dy;
        seg.c2[i] = bspl;
        seg.c3[i] = dy - h * k7[i] - bspl;
        seg.c4[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] +
                         d7 * k7[i]);
      }
      sol.segments_.push_back(std::move(seg));

      t += h;
      y.swap(ynew);
      k1.swap(k7);
    } else {
      last = false;
    }

    const double fac = std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 10.0);
    h = std::min(h * fac, span);
  }

  return sol;
}

}  // namespace tdho
