#include "tdho/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tdho/errors.hpp"

namespace tdho {

double Scenario::effective_span() const {
  if (span > 0.0) return span;
  if (period) return *period;
  return 2.0 * M_PI;
}

OscillatorSpec Scenario::to_spec() const {
  OscillatorSpec spec;
  spec.w0_sq = make_profile(w0sq.preset, w0sq.params);
  spec.mass = make_profile(mass.preset, mass.params);
  spec.gauge = make_profile(gauge.preset, gauge.params);
  spec.g = g;
  spec.hbar = hbar;
  spec.u1_coeffs = u1_coeffs;
  spec.validate();
  return spec;
}

void Scenario::validate() const {
  const OscillatorSpec spec = to_spec();
  require(n_samples >= 16, ErrorCode::invalid_argument, "scenario: n_samples must be >= 16");
  require(dt > 0.0, ErrorCode::invalid_argument, "scenario: dt must be positive");
  require(!modes.empty(), ErrorCode::invalid_argument, "scenario: mode list is empty");
  for (int n : modes)
    require(n >= 0 && n <= 64, ErrorCode::invalid_argument, "scenario: mode index out of range");
  if (period) require(*period > 0.0, ErrorCode::invalid_argument, "scenario: period must be > 0");
  const double sp = effective_span();
  require(sp > 0.0 && std::isfinite(sp), ErrorCode::invalid_argument, "scenario: bad span");
  // Probe the profiles across the span for finiteness and positivity.
  for (int i = 0; i <= 64; ++i) {
    const double t = t0 + sp * i / 64.0;
    require(std::isfinite(spec.w0_sq(t)), ErrorCode::invalid_argument,
            "scenario: w0_sq profile not finite on the span");
    require(spec.mass(t) > 0.0, ErrorCode::invalid_argument,
            "scenario: mass profile must stay positive on the span");
    require(std::isfinite(spec.gauge(t)), ErrorCode::invalid_argument,
            "scenario: gauge profile not finite on the span");
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

struct Cursor {
  std::string section;
  int line_no = 0;
};

[[noreturn]] void parse_fail(const Cursor& c, const std::string& what) {
  fail(ErrorCode::parse_error, "config line " + std::to_string(c.line_no) + ": " + what);
}

double parse_number(const Cursor& c, const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    parse_fail(c, "expected a number, got '" + s + "'");
  }
  if (used != s.size()) parse_fail(c, "trailing characters after number '" + s + "'");
  return v;
}

std::vector<double> parse_numbers(const Cursor& c, const std::string& s) {
  std::istringstream in(s);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_number(c, tok));
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Scenario sc;
  sc.modes.clear();
  bool modes_seen = false;

  Cursor cur;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++cur.line_no;
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') parse_fail(cur, "unterminated section header");
      cur.section = trim(line.substr(1, line.size() - 2));
      static const char* known[] = {"scenario", "w0sq",   "mass",  "gauge", "classical",
                                    "grid",     "evolve", "modes", "debug"};
      bool ok = false;
      for (const char* k : known) ok = ok || (cur.section == k);
      if (!ok) parse_fail(cur, "unknown section [" + cur.section + "]");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) parse_fail(cur, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) parse_fail(cur, "empty key or value");

    if (cur.section == "scenario") {
      if (key == "name")
        sc.name = value;
      else if (key == "hbar")
        sc.hbar = parse_number(cur, value);
      else if (key == "g")
        sc.g = parse_number(cur, value);
      else if (key == "period")
        sc.period = parse_number(cur, value);
      else
        parse_fail(cur, "unknown key '" + key + "' in [scenario]");
    } else if (cur.section == "w0sq" || cur.section == "mass" || cur.section == "gauge") {
      ProfileConfig& p = (cur.section == "w0sq") ? sc.w0sq
                         : (cur.section == "mass") ? sc.mass
                                                   : sc.gauge;
      if (key == "preset") {
        p.preset = value;
        p.params.clear();
      } else {
        p.params[key] = parse_number(cur, value);
      }
    } else if (cur.section == "classical") {
      if (key == "t0")
        sc.t0 = parse_number(cur, value);
      else if (key == "ics") {
        const auto v = parse_numbers(cur, value);
        if (v.size() != 4) parse_fail(cur, "ics needs 4 numbers (u0, u0', v0, v0')");
        std::copy(v.begin(), v.end(), sc.ics.begin());
      } else if (key == "u1") {
        const auto v = parse_numbers(cur, value);
        if (v.size() != 2) parse_fail(cur, "u1 needs 2 coefficients (c_u, c_v)");
        sc.u1_coeffs = {v[0], v[1]};
      } else if (key == "n_samples")
        sc.n_samples = static_cast<int>(parse_number(cur, value));
      else if (key == "span")
        sc.span = parse_number(cur, value);
      else
        parse_fail(cur, "unknown key '" + key + "' in [classical]");
    } else if (cur.section == "grid") {
      if (key == "x_max")
        sc.x_max = parse_number(cur, value);
      else if (key == "n")
        sc.grid_n = static_cast<int>(parse_number(cur, value));
      else
        parse_fail(cur, "unknown key '" + key + "' in [grid]");
    } else if (cur.section == "evolve") {
      if (key == "dt")
        sc.dt = parse_number(cur, value);
      else if (key == "store_every")
        sc.store_every = static_cast<int>(parse_number(cur, value));
      else
        parse_fail(cur, "unknown key '" + key + "' in [evolve]");
    } else if (cur.section == "modes") {
      if (key == "list") {
        modes_seen = true;
        for (double v : parse_numbers(cur, value)) {
          if (v < 0 || v != std::floor(v)) parse_fail(cur, "mode indices must be nonneg integers");
          sc.modes.push_back(static_cast<int>(v));
        }
      } else
        parse_fail(cur, "unknown key '" + key + "' in [modes]");
    } else if (cur.section == "debug") {
      if (key == "flip_delta_u1_sign")
        sc.flip_delta_u1_sign = parse_number(cur, value) != 0.0;
      else
        parse_fail(cur, "unknown key '" + key + "' in [debug]");
    } else {
      parse_fail(cur, "key outside any section");
    }
  }

  if (!modes_seen) sc.modes = {0, 1, 2};
  cur.line_no = 0;
  try {
    sc.validate();
  } catch (const Error& e) {
    fail(ErrorCode::parse_error, std::string("config: ") + e.what());
  }
  return sc;
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "[scenario]\n";
  out << "name = " << s.name << "\n";
  out << "hbar = " << format_double(s.hbar) << "\n";
  out << "g = " << format_double(s.g) << "\n";
  if (s.period) out << "period = " << format_double(*s.period) << "\n";

  const auto emit_profile = [&out](const char* section, const ProfileConfig& p) {
    out << "\n[" << section << "]\n";
    out << "preset = " << p.preset << "\n";
    for (const auto& [k, v] : p.params) out << k << " = " << format_double(v) << "\n";
  };
  emit_profile("w0sq", s.w0sq);
  emit_profile("mass", s.mass);
  emit_profile("gauge", s.gauge);

  out << "\n[classical]\n";
  out << "t0 = " << format_double(s.t0) << "\n";
  out << "ics = " << format_double(s.ics[0]) << " " << format_double(s.ics[1]) << " "
      << format_double(s.ics[2]) << " " << format_double(s.ics[3]) << "\n";
  out << "u1 = " << format_double(s.u1_coeffs.first) << " " << format_double(s.u1_coeffs.second)
      << "\n";
  out << "n_samples = " << s.n_samples << "\n";
  out << "span = " << format_double(s.span) << "\n";

  out << "\n[grid]\n";
  out << "x_max = " << format_double(s.x_max) << "\n";
  out << "n = " << s.grid_n << "\n";

  out << "\n[evolve]\n";
  out << "dt = " << format_double(s.dt) << "\n";
  out << "store_every = " << s.store_every << "\n";

  out << "\n[modes]\n";
  out << "list =";
  for (int n : s.modes) out << " " << n;
  out << "\n";

  if (s.flip_delta_u1_sign) {
    out << "\n[debug]\n";
    out << "flip_delta_u1_sign = 1\n";
  }
  return out.str();
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::io_error, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace tdho
