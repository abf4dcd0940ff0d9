#pragma once

#include <functional>
#include <map>
#include <string>

namespace tdho {

// Scalar function of time with first and second derivatives.  Presets carry
// analytic derivatives; ad-hoc closures fall back to central differences.
class Profile {
public:
  Profile() : Profile(constant(0.0)) {}

  Profile(std::function<double(double)> f, std::function<double(double)> df = {},
          std::function<double(double)> d2f = {});

  double operator()(double t) const { return f_(t); }
  double deriv(double t) const;
  double deriv2(double t) const;

  static Profile constant(double value);

  const std::string& preset() const { return preset_; }
  const std::map<std::string, double>& params() const { return params_; }

private:
  std::function<double(double)> f_, df_, d2f_;
  std::string preset_;
  std::map<std::string, double> params_;

  friend Profile make_profile(const std::string&, const std::map<std::string, double>&);
};

// Named presets:
//   const          : value
//   step           : initial, final, t_step, width     (smoothed tanh step)
//   mathieu        : base, amp, nu                     (base + amp*cos(nu t))
//   gaussian_pulse : base, amp, center, sigma
//   sinusoidal     : base, amp, nu, phase              (base + amp*sin(nu t + phase))
Profile make_profile(const std::string& preset, const std::map<std::string, double>& params);

}  // namespace tdho
