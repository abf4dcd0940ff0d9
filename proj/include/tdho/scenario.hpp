#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdho/classical.hpp"

namespace tdho {

struct ProfileConfig {
  std::string preset = "const";
  std::map<std::string, double> params = {{"value", 0.0}};
};

// One experiment: the physical spec plus grid/time controls.  Parses from a
// flat sectioned key = value text; serialization is canonical so that
// parse -> serialize -> parse is the identity.
struct Scenario {
  std::string name = "scenario";
  ProfileConfig w0sq{"const", {{"value", 1.0}}};
  ProfileConfig mass{"const", {{"value", 1.0}}};
  ProfileConfig gauge{"const", {{"value", 0.0}}};
  double g = 0.0;
  double hbar = 1.0;
  std::optional<double> period;  // declared parameter period T

  double t0 = 0.0;
  std::array<double, 4> ics{1.0, 0.0, 0.0, 1.0};
  std::pair<double, double> u1_coeffs{0.0, 0.0};
  int n_samples = 2048;
  double span = 0.0;  // 0 = one period if declared, else 2*pi

  double x_max = 0.0;  // 0 = auto
  int grid_n = 0;      // 0 = auto

  double dt = 1e-3;
  int store_every = 0;

  std::vector<int> modes{0, 1, 2};

  // Fault injection for harness tests: builds psi^0 states with the sign of
  // delta_u1 flipped, which must trip the residual check.
  bool flip_delta_u1_sign = false;

  double effective_span() const;
  OscillatorSpec to_spec() const;
  void validate() const;
};

Scenario parse_scenario(std::string_view text);
std::string serialize_scenario(const Scenario& s);
Scenario load_scenario_file(const std::string& path);

// Canonical float formatting used in reports and configs (17 significant
// digits, round-trip exact).
std::string format_double(double v);

}  // namespace tdho
