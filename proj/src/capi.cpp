#include "tdho.h"

#include <cstring>
#include <sstream>
#include <string>

#include "tdho/errors.hpp"
#include "tdho/runners.hpp"

namespace {

thread_local std::string g_last_error;

tdho_status map_code(tdho::ErrorCode c) {
  using EC = tdho::ErrorCode;
  switch (c) {
    case EC::invalid_argument: return TDHO_ERR_INVALID_ARGUMENT;
    case EC::domain_error: return TDHO_ERR_DOMAIN;
    case EC::range_error: return TDHO_ERR_RANGE;
    case EC::degenerate_solution: return TDHO_ERR_DEGENERATE;
    case EC::integration_failure: return TDHO_ERR_INTEGRATION;
    case EC::support_error: return TDHO_ERR_SUPPORT;
    case EC::consistency_error: return TDHO_ERR_CONSISTENCY;
    case EC::stability_error: return TDHO_ERR_STABILITY;
    case EC::input_error: return TDHO_ERR_INPUT;
    case EC::parse_error: return TDHO_ERR_PARSE;
    case EC::io_error: return TDHO_ERR_IO;
  }
  return TDHO_ERR_INTERNAL;
}

template <typename Fn>
tdho_status guarded(Fn&& fn) {
  try {
    fn();
    return TDHO_OK;
  } catch (const tdho::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TDHO_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TDHO_ERR_INTERNAL;
  }
}

tdho_status arg_error(const char* what) {
  g_last_error = what;
  return TDHO_ERR_INVALID_ARGUMENT;
}

}  // namespace

struct tdho_spec {
  tdho::OscillatorSpec spec;
};
struct tdho_trajectory {
  tdho::ClassicalTrajectory traj;
};
struct tdho_wavefunction {
  tdho::GridWavefunction psi;
};
struct tdho_scenario {
  tdho::Scenario sc;
};
struct tdho_verify_report {
  tdho::VerifyReport rep;
};
struct tdho_phase_report {
  tdho::PhaseRunReport rep;
};
struct tdho_invariant_report {
  tdho::InvariantRunReport rep;
};
struct tdho_evolution {
  tdho::EvolveRunReport rep;
};

extern "C" {

const char* tdho_version(void) { return "0.1.0"; }

const char* tdho_last_error(void) { return g_last_error.c_str(); }

/* ---------------- spec ---------------- */

tdho_status tdho_spec_create(tdho_spec** out) {
  if (!out) return arg_error("null output pointer");
  return guarded([&] { *out = new tdho_spec{}; });
}

void tdho_spec_destroy(tdho_spec* spec) { delete spec; }

tdho_status tdho_spec_set_profile(tdho_spec* spec, const char* which, const char* preset,
                                  const char* const* keys, const double* values, size_t n) {
  if (!spec || !which || !preset) return arg_error("null argument");
  if (n > 0 && (!keys || !values)) return arg_error("null parameter arrays");
  return guarded([&] {
    std::map<std::string, double> params;
    for (size_t i = 0; i < n; ++i) params[keys[i]] = values[i];
    tdho::Profile p = tdho::make_profile(preset, params);
    const std::string w = which;
    if (w == "w0sq")
      spec->spec.w0_sq = p;
    else if (w == "mass")
      spec->spec.mass = p;
    else if (w == "gauge")
      spec->spec.gauge = p;
    else
      tdho::fail(tdho::ErrorCode::invalid_argument, "unknown profile slot '" + w + "'");
  });
}

tdho_status tdho_spec_set_coupling(tdho_spec* spec, double g) {
  if (!spec) return arg_error("null spec");
  return guarded([&] {
    spec->spec.g = g;
    spec->spec.validate();
  });
}

tdho_status tdho_spec_set_hbar(tdho_spec* spec, double hbar) {
  if (!spec) return arg_error("null spec");
  return guarded([&] {
    spec->spec.hbar = hbar;
    spec->spec.validate();
  });
}

tdho_status tdho_spec_set_u1(tdho_spec* spec, double c_u, double c_v) {
  if (!spec) return arg_error("null spec");
  spec->spec.u1_coeffs = {c_u, c_v};
  return TDHO_OK;
}

tdho_status tdho_alpha_of_g(double g, double hbar, double* alpha_out) {
  if (!alpha_out) return arg_error("null output pointer");
  return guarded([&] { *alpha_out = tdho::alpha_of_g(g, hbar); });
}

/* ---------------- trajectory ---------------- */

tdho_status tdho_solve_linear(const tdho_spec* spec, double t0, double t1, const double ics[4],
                              int n_samples, tdho_trajectory** out) {
  if (!spec || !ics || !out) return arg_error("null argument");
  return guarded([&] {
    auto* h = new tdho_trajectory{};
    try {
      h->traj = tdho::solve_linear(spec->spec, t0, t1, {ics[0], ics[1], ics[2], ics[3]},
                                   n_samples);
    } catch (...) {
      delete h;
      throw;
    }
    *out = h;
  });
}

void tdho_trajectory_destroy(tdho_trajectory* traj) { delete traj; }

int tdho_trajectory_size(const tdho_trajectory* traj) {
  return traj ? static_cast<int>(traj->traj.size()) : 0;
}

double tdho_trajectory_omega0(const tdho_trajectory* traj) {
  return traj ? traj->traj.omega0 : 0.0;
}

tdho_status tdho_trajectory_series(const tdho_trajectory* traj, const char* field, double* buf,
                                   size_t len) {
  if (!traj || !field || !buf) return arg_error("null argument");
  return guarded([&] {
    const auto& t = traj->traj;
    const std::vector<double>* src = nullptr;
    const std::string f = field;
    if (f == "t")
      src = &t.t_grid;
    else if (f == "u0")
      src = &t.u0;
    else if (f == "du0")
      src = &t.du0;
    else if (f == "v0")
      src = &t.v0;
    else if (f == "dv0")
      src = &t.dv0;
    else if (f == "rho0")
      src = &t.rho0;
    else if (f == "drho0")
      src = &t.drho0;
    else if (f == "tau")
      src = &t.tau;
    else if (f == "u1")
      src = &t.u1;
    else if (f == "du1")
      src = &t.du1;
    else if (f == "delta_u1")
      src = &t.delta_u1;
    else
      tdho::fail(tdho::ErrorCode::invalid_argument, "unknown trajectory field '" + f + "'");
    tdho::require(len >= src->size(), tdho::ErrorCode::invalid_argument,
                  "buffer too small for trajectory series");
    std::memcpy(buf, src->data(), src->size() * sizeof(double));
  });
}

tdho_status tdho_trajectory_wronskian_drift(const tdho_trajectory* traj, double* out) {
  if (!traj || !out) return arg_error("null argument");
  return guarded([&] { *out = tdho::wronskian_drift(traj->traj); });
}

tdho_status tdho_trajectory_ermakov_residual(const tdho_trajectory* traj, const tdho_spec* spec,
                                             double* out) {
  if (!traj || !spec || !out) return arg_error("null argument");
  return guarded([&] { *out = tdho::ermakov_residual(traj->traj, spec->spec); });
}

/* ---------------- wavefunctions ---------------- */

namespace {

tdho_status eval_family(const tdho_trajectory* traj, const tdho_spec* spec, int n, int t_index,
                        double x_max, int grid_n, bool inverse_square, tdho_wavefunction** out) {
  if (!traj || !spec || !out) return arg_error("null argument");
  return guarded([&] {
    std::shared_ptr<const tdho::QuadratureGrid> grid;
    if (x_max > 0.0 && grid_n > 0) {
      grid = tdho::make_shared_grid(tdho::build_grid(
          inverse_square ? tdho::Domain::half_line : tdho::Domain::full_line, x_max, grid_n));
    } else if (inverse_square) {
      grid = tdho::make_shared_grid(
          tdho::suggest_grid_inverse_square(traj->traj, spec->spec, n));
    } else {
      grid = tdho::make_shared_grid(tdho::suggest_grid_sho(traj->traj, spec->spec, n));
    }
    auto* h = new tdho_wavefunction{};
    try {
      h->psi = inverse_square
                   ? tdho::phi(n, traj->traj, spec->spec, static_cast<std::size_t>(t_index), grid)
                   : tdho::psi_0(n, traj->traj, spec->spec, static_cast<std::size_t>(t_index),
                                 grid);
    } catch (...) {
      delete h;
      throw;
    }
    *out = h;
  });
}

}  // namespace

tdho_status tdho_eval_psi0(const tdho_trajectory* traj, const tdho_spec* spec, int n, int t_index,
                           double x_max, int grid_n, tdho_wavefunction** out) {
  return eval_family(traj, spec, n, t_index, x_max, grid_n, false, out);
}

tdho_status tdho_eval_phi(const tdho_trajectory* traj, const tdho_spec* spec, int n, int t_index,
                          double x_max, int grid_n, tdho_wavefunction** out) {
  return eval_family(traj, spec, n, t_index, x_max, grid_n, true, out);
}

void tdho_wavefunction_destroy(tdho_wavefunction* psi) { delete psi; }

int tdho_wavefunction_size(const tdho_wavefunction* psi) {
  return psi ? static_cast<int>(psi->psi.size()) : 0;
}

tdho_status tdho_wavefunction_data(const tdho_wavefunction* psi, double* x, double* re,
                                   double* im, size_t len) {
  if (!psi || !x || !re || !im) return arg_error("null argument");
  return guarded([&] {
    tdho::require(len >= psi->psi.size(), tdho::ErrorCode::invalid_argument,
                  "buffer too small for wavefunction data");
    for (std::size_t i = 0; i < psi->psi.size(); ++i) {
      x[i] = psi->psi.grid->nodes[i];
      re[i] = psi->psi.values[i].real();
      im[i] = psi->psi.values[i].imag();
    }
  });
}

double tdho_wavefunction_norm(const tdho_wavefunction* psi) { return psi ? psi->psi.norm() : 0.0; }

double tdho_wavefunction_mean_x(const tdho_wavefunction* psi) {
  return psi ? psi->psi.mean_x() : 0.0;
}

double tdho_wavefunction_var_x(const tdho_wavefunction* psi) {
  return psi ? psi->psi.var_x() : 0.0;
}

/* ---------------- scenarios ---------------- */

tdho_status tdho_scenario_parse(const char* text, tdho_scenario** out) {
  if (!text || !out) return arg_error("null argument");
  return guarded([&] {
    auto* h = new tdho_scenario{};
    try {
      h->sc = tdho::parse_scenario(text);
    } catch (...) {
      delete h;
      throw;
    }
    *out = h;
  });
}

void tdho_scenario_destroy(tdho_scenario* sc) { delete sc; }

tdho_status tdho_scenario_serialize(const tdho_scenario* sc, char** out) {
  if (!sc || !out) return arg_error("null argument");
  return guarded([&] {
    const std::string s = tdho::serialize_scenario(sc->sc);
    char* buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
  });
}

void tdho_string_free(char* s) { delete[] s; }

tdho_status tdho_scenario_set(tdho_scenario* sc, const char* key, const char* value) {
  if (!sc || !key || !value) return arg_error("null argument");
  return guarded([&] {
    const std::string k = key;
    const std::string v = value;
    auto as_double = [&] {
      std::size_t used = 0;
      const double d = std::stod(v, &used);
      tdho::require(used == v.size(), tdho::ErrorCode::invalid_argument,
                    "scenario_set: bad numeric value '" + v + "'");
      return d;
    };
    if (k == "name")
      sc->sc.name = v;
    else if (k == "dt")
      sc->sc.dt = as_double();
    else if (k == "grid_n")
      sc->sc.grid_n = static_cast<int>(as_double());
    else if (k == "x_max")
      sc->sc.x_max = as_double();
    else if (k == "span")
      sc->sc.span = as_double();
    else if (k == "store_every")
      sc->sc.store_every = static_cast<int>(as_double());
    else if (k == "modes") {
      std::istringstream in(v);
      std::vector<int> modes;
      int m = 0;
      while (in >> m) modes.push_back(m);
      tdho::require(!modes.empty() && in.eof(), tdho::ErrorCode::invalid_argument,
                    "scenario_set: bad mode list '" + v + "'");
      sc->sc.modes = modes;
    } else {
      tdho::fail(tdho::ErrorCode::invalid_argument, "scenario_set: unknown key '" + k + "'");
    }
    sc->sc.validate();
  });
}

const char* tdho_scenario_name(const tdho_scenario* sc) {
  return sc ? sc->sc.name.c_str() : "";
}

/* ---------------- runners ---------------- */

tdho_status tdho_run_verify(const tdho_scenario* sc, uint64_t seed, tdho_verify_report** out) {
  if (!sc || !out) return arg_error("null argument");
  return guarded([&] { *out = new tdho_verify_report{tdho::run_verify(sc->sc, seed)}; });
}

void tdho_verify_report_destroy(tdho_verify_report* rep) { delete rep; }

int tdho_verify_report_size(const tdho_verify_report* rep) {
  return rep ? static_cast<int>(rep->rep.checks.size()) : 0;
}

int tdho_verify_report_pass(const tdho_verify_report* rep) {
  return rep && rep->rep.pass ? 1 : 0;
}

tdho_status tdho_verify_report_row(const tdho_verify_report* rep, int i, const char** name,
                                   double* value, double* threshold, const char** cmp,
                                   int* pass) {
  if (!rep) return arg_error("null report");
  if (i < 0 || i >= static_cast<int>(rep->rep.checks.size())) return arg_error("row out of range");
  const auto& row = rep->rep.checks[static_cast<std::size_t>(i)];
  if (name) *name = row.name.c_str();
  if (value) *value = row.value;
  if (threshold) *threshold = row.threshold;
  if (cmp) *cmp = row.cmp.c_str();
  if (pass) *pass = row.pass ? 1 : 0;
  return TDHO_OK;
}

tdho_status tdho_run_phase(const tdho_scenario* sc, tdho_phase_report** out) {
  if (!sc || !out) return arg_error("null argument");
  return guarded([&] { *out = new tdho_phase_report{tdho::run_phase(sc->sc)}; });
}

void tdho_phase_report_destroy(tdho_phase_report* rep) { delete rep; }

int tdho_phase_report_periodic(const tdho_phase_report* rep) {
  return rep && rep->rep.periodic ? 1 : 0;
}

double tdho_phase_report_t_prime(const tdho_phase_report* rep) {
  return rep ? rep->rep.t_prime : 0.0;
}

double tdho_phase_report_residual(const tdho_phase_report* rep) {
  return rep ? rep->rep.periodicity_residual : 0.0;
}

int tdho_phase_report_size(const tdho_phase_report* rep) {
  return rep ? static_cast<int>(rep->rep.rows.size()) : 0;
}

int tdho_phase_report_pass(const tdho_phase_report* rep) {
  return rep && rep->rep.pass ? 1 : 0;
}

tdho_status tdho_phase_report_row(const tdho_phase_report* rep, int i, int* n, double* alpha,
                                  double* chi, double* dyn, double* gamma, double* gamma_alt,
                                  double* route_diff, int* pass) {
  if (!rep) return arg_error("null report");
  if (i < 0 || i >= static_cast<int>(rep->rep.rows.size())) return arg_error("row out of range");
  const auto& row = rep->rep.rows[static_cast<std::size_t>(i)];
  if (n) *n = row.report.n;
  if (alpha) *alpha = row.report.alpha;
  if (chi) *chi = row.report.chi_n;
  if (dyn) *dyn = row.report.dyn_n;
  if (gamma) *gamma = row.report.gamma_n;
  if (gamma_alt) *gamma_alt = row.report.gamma_expectation_route;
  if (route_diff) *route_diff = row.report.route_difference;
  if (pass) *pass = row.pass ? 1 : 0;
  return TDHO_OK;
}

tdho_status tdho_run_invariant(const tdho_scenario* sc, tdho_invariant_report** out) {
  if (!sc || !out) return arg_error("null argument");
  return guarded([&] { *out = new tdho_invariant_report{tdho::run_invariant(sc->sc)}; });
}

void tdho_invariant_report_destroy(tdho_invariant_report* rep) { delete rep; }

int tdho_invariant_report_size(const tdho_invariant_report* rep) {
  return rep ? static_cast<int>(rep->rep.rows.size()) : 0;
}

int tdho_invariant_report_pass(const tdho_invariant_report* rep) {
  return rep && rep->rep.pass ? 1 : 0;
}

tdho_status tdho_invariant_report_offdiag(const tdho_invariant_report* rep, double* i0,
                                          double* i_in) {
  if (!rep) return arg_error("null report");
  if (i0) *i0 = rep->rep.offdiag_deviation_i0;
  if (i_in) *i_in = rep->rep.offdiag_deviation_i_in;
  return TDHO_OK;
}

tdho_status tdho_invariant_report_row(const tdho_invariant_report* rep, int i,
                                      const char** family, int* n, double* expected,
                                      double* value_t0, double* max_dev, int* pass) {
  if (!rep) return arg_error("null report");
  if (i < 0 || i >= static_cast<int>(rep->rep.rows.size())) return arg_error("row out of range");
  const auto& row = rep->rep.rows[static_cast<std::size_t>(i)];
  if (family) *family = row.family.c_str();
  if (n) *n = row.n;
  if (expected) *expected = row.expected;
  if (value_t0) *value_t0 = row.value_t0;
  if (max_dev) *max_dev = row.max_diag_deviation;
  if (pass) *pass = row.pass ? 1 : 0;
  return TDHO_OK;
}

tdho_status tdho_run_evolve(const tdho_scenario* sc, tdho_evolution** out) {
  if (!sc || !out) return arg_error("null argument");
  return guarded([&] { *out = new tdho_evolution{tdho::run_evolve(sc->sc)}; });
}

void tdho_evolution_destroy(tdho_evolution* ev) { delete ev; }

int tdho_evolution_n_times(const tdho_evolution* ev) {
  return ev ? static_cast<int>(ev->rep.times.size()) : 0;
}

int tdho_evolution_n_modes(const tdho_evolution* ev) {
  return ev ? static_cast<int>(ev->rep.modes.size()) : 0;
}

int tdho_evolution_grid_size(const tdho_evolution* ev) {
  return ev && ev->rep.grid ? static_cast<int>(ev->rep.grid->size()) : 0;
}

const char* tdho_evolution_family(const tdho_evolution* ev) {
  return ev ? ev->rep.family.c_str() : "";
}

tdho_status tdho_evolution_grid(const tdho_evolution* ev, double* x, size_t len) {
  if (!ev || !x) return arg_error("null argument");
  return guarded([&] {
    tdho::require(len >= ev->rep.grid->size(), tdho::ErrorCode::invalid_argument,
                  "buffer too small");
    std::memcpy(x, ev->rep.grid->nodes.data(), ev->rep.grid->size() * sizeof(double));
  });
}

tdho_status tdho_evolution_times(const tdho_evolution* ev, double* t, size_t len) {
  if (!ev || !t) return arg_error("null argument");
  return guarded([&] {
    tdho::require(len >= ev->rep.times.size(), tdho::ErrorCode::invalid_argument,
                  "buffer too small");
    std::memcpy(t, ev->rep.times.data(), ev->rep.times.size() * sizeof(double));
  });
}

tdho_status tdho_evolution_series(const tdho_evolution* ev, const char* field, double* buf,
                                  size_t len) {
  if (!ev || !field || !buf) return arg_error("null argument");
  return guarded([&] {
    const std::string f = field;
    const std::vector<double>* src = nullptr;
    if (f == "tau")
      src = &ev->rep.tau;
    else if (f == "rho")
      src = &ev->rep.rho;
    else
      tdho::fail(tdho::ErrorCode::invalid_argument, "unknown evolution series '" + f + "'");
    tdho::require(len >= src->size(), tdho::ErrorCode::invalid_argument, "buffer too small");
    std::memcpy(buf, src->data(), src->size() * sizeof(double));
  });
}

tdho_status tdho_evolution_mode_index(const tdho_evolution* ev, int k, int* n) {
  if (!ev || !n) return arg_error("null argument");
  if (k < 0 || k >= static_cast<int>(ev->rep.modes.size())) return arg_error("mode out of range");
  *n = ev->rep.modes[static_cast<std::size_t>(k)].n;
  return TDHO_OK;
}

tdho_status tdho_evolution_mode_series(const tdho_evolution* ev, int k, const char* field,
                                       double* buf, size_t len) {
  if (!ev || !field || !buf) return arg_error("null argument");
  if (k < 0 || k >= static_cast<int>(ev->rep.modes.size())) return arg_error("mode out of range");
  return guarded([&] {
    const auto& m = ev->rep.modes[static_cast<std::size_t>(k)];
    const std::string f = field;
    const std::vector<double>* src = nullptr;
    if (f == "norm")
      src = &m.norms;
    else if (f == "mean_x")
      src = &m.mean_xs;
    else if (f == "var_x")
      src = &m.var_xs;
    else if (f == "fidelity")
      src = &m.fidelity_vs_analytic;
    else
      tdho::fail(tdho::ErrorCode::invalid_argument, "unknown mode series '" + f + "'");
    tdho::require(len >= src->size(), tdho::ErrorCode::invalid_argument, "buffer too small");
    std::memcpy(buf, src->data(), src->size() * sizeof(double));
  });
}

tdho_status tdho_evolution_state(const tdho_evolution* ev, int k, int time_index, double* re,
                                 double* im, size_t len) {
  if (!ev || !re || !im) return arg_error("null argument");
  if (k < 0 || k >= static_cast<int>(ev->rep.modes.size())) return arg_error("mode out of range");
  return guarded([&] {
    const auto& m = ev->rep.modes[static_cast<std::size_t>(k)];
    tdho::require(time_index >= 0 && time_index < static_cast<int>(m.samples.size()),
                  tdho::ErrorCode::invalid_argument, "time index out of range");
    const auto& st = m.samples[static_cast<std::size_t>(time_index)];
    tdho::require(len >= st.size(), tdho::ErrorCode::invalid_argument, "buffer too small");
    for (std::size_t i = 0; i < st.size(); ++i) {
      re[i] = st.values[i].real();
      im[i] = st.values[i].imag();
    }
  });
}

}  // extern "C"
