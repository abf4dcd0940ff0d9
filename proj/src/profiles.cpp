#include "tdho/profiles.hpp"

#include <cmath>

#include "tdho/errors.hpp"

namespace tdho {

Profile::Profile(std::function<double(double)> f, std::function<double(double)> df,
                 std::function<double(double)> d2f)
    : f_(std::move(f)), df_(std::move(df)), d2f_(std::move(d2f)) {
  require(static_cast<bool>(f_), ErrorCode::invalid_argument, "profile: empty callable");
}

double Profile::deriv(double t) const {
  if (df_) return df_(t);
  const double h = 1e-5 * (1.0 + std::abs(t));
  return (f_(t + h) - f_(t - h)) / (2.0 * h);
}

double Profile::deriv2(double t) const {
  if (d2f_) return d2f_(t);
  const double h = 2e-4 * (1.0 + std::abs(t));
  return (f_(t + h) - 2.0 * f_(t) + f_(t - h)) / (h * h);
}

Profile Profile::constant(double value) {
  Profile p([value](double) { return value; }, [](double) { return 0.0; },
            [](double) { return 0.0; });
  p.preset_ = "const";
  p.params_ = {{"value", value}};
  return p;
}

namespace {

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 double fallback, bool required = false) {
  auto it = params.find(key);
  if (it != params.end()) return it->second;
  require(!required, ErrorCode::invalid_argument, "profile: missing parameter '" + key + "'");
  return fallback;
}

void check_keys(const std::string& preset, const std::map<std::string, double>& params,
                std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : params) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || (k == a);
    require(ok, ErrorCode::invalid_argument,
            "profile '" + preset + "': unknown parameter '" + k + "'");
  }
}

}  // namespace

Profile make_profile(const std::string& preset, const std::map<std::string, double>& params) {
  Profile p = Profile::constant(0.0);
  if (preset == "const") {
    check_keys(preset, params, {"value"});
    p = Profile::constant(get_param(params, "value", 0.0, true));
  } else if (preset == "step") {
    check_keys(preset, params, {"initial", "final", "t_step", "width"});
    const double a = get_param(params, "initial", 1.0);
    const double b = get_param(params, "final", 2.0);
    const double ts = get_param(params, "t_step", 0.0);
    const double w = get_param(params, "width", 0.1);
    require(w > 0.0, ErrorCode::invalid_argument, "step profile: width must be positive");
    const double amp = 0.5 * (b - a);
    p = Profile(
        [=](double t) { return a + amp * (1.0 + std::tanh((t - ts) / w)); },
        [=](double t) {
          const double c = std::cosh((t - ts) / w);
          return amp / (w * c * c);
        },
        [=](double t) {
          const double u = (t - ts) / w;
          const double c = std::cosh(u);
          return -2.0 * amp * std::tanh(u) / (w * w * c * c);
        });
  } else if (preset == "mathieu") {
    check_keys(preset, params, {"base", "amp", "nu"});
    const double base = get_param(params, "base", 1.0);
    const double amp = get_param(params, "amp", 0.2);
    const double nu = get_param(params, "nu", 2.0);
    p = Profile([=](double t) { return base + amp * std::cos(nu * t); },
                [=](double t) { return -amp * nu * std::sin(nu * t); },
                [=](double t) { return -amp * nu * nu * std::cos(nu * t); });
  } else if (preset == "gaussian_pulse") {
    check_keys(preset, params, {"base", "amp", "center", "sigma"});
    const double base = get_param(params, "base", 1.0);
    const double amp = get_param(params, "amp", 0.5);
    const double tc = get_param(params, "center", 0.0);
    const double s = get_param(params, "sigma", 1.0);
    require(s > 0.0, ErrorCode::invalid_argument, "gaussian_pulse: sigma must be positive");
    p = Profile(
        [=](double t) {
          const double u = (t - tc) / s;
          return base + amp * std::exp(-0.5 * u * u);
        },
        [=](double t) {
          const double u = (t - tc) / s;
          return -amp * u / s * std::exp(-0.5 * u * u);
        },
        [=](double t) {
          const double u = (t - tc) / s;
          return amp * (u * u - 1.0) / (s * s) * std::exp(-0.5 * u * u);
        });
  } else if (preset == "sinusoidal") {
    check_keys(preset, params, {"base", "amp", "nu", "phase"});
    const double base = get_param(params, "base", 0.0);
    const double amp = get_param(params, "amp", 0.0);
    const double nu = get_param(params, "nu", 1.0);
    const double ph = get_param(params, "phase", 0.0);
    p = Profile([=](double t) { return base + amp * std::sin(nu * t + ph); },
                [=](double t) { return amp * nu * std::cos(nu * t + ph); },
                [=](double t) { return -amp * nu * nu * std::sin(nu * t + ph); });
  } else {
    fail(ErrorCode::invalid_argument, "unknown profile preset '" + preset + "'");
  }
  p.preset_ = preset;
  p.params_ = params;
  return p;
}

}  // namespace tdho
