/* tdho: time-dependent harmonic oscillator toolkit, C interface.
 *
 * Opaque handles plus status codes; every function that can fail returns a
 * tdho_status and leaves a thread-local message readable through
 * tdho_last_error().  Handles are destroyed with their matching _destroy
 * call; strings returned through char** are released with tdho_string_free.
 */
#ifndef TDHO_H
#define TDHO_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tdho_status {
  TDHO_OK = 0,
  TDHO_ERR_INVALID_ARGUMENT = 1,
  TDHO_ERR_DOMAIN = 2,
  TDHO_ERR_RANGE = 3,
  TDHO_ERR_DEGENERATE = 4,
  TDHO_ERR_INTEGRATION = 5,
  TDHO_ERR_SUPPORT = 6,
  TDHO_ERR_CONSISTENCY = 7,
  TDHO_ERR_STABILITY = 8,
  TDHO_ERR_INPUT = 9,
  TDHO_ERR_PARSE = 10,
  TDHO_ERR_IO = 11,
  TDHO_ERR_INTERNAL = 12
} tdho_status;

const char* tdho_version(void);
const char* tdho_last_error(void);

typedef struct tdho_spec tdho_spec;
typedef struct tdho_trajectory tdho_trajectory;
typedef struct tdho_wavefunction tdho_wavefunction;
typedef struct tdho_scenario tdho_scenario;
typedef struct tdho_verify_report tdho_verify_report;
typedef struct tdho_phase_report tdho_phase_report;
typedef struct tdho_invariant_report tdho_invariant_report;
typedef struct tdho_evolution tdho_evolution;

/* ---------------- oscillator spec ---------------- */

tdho_status tdho_spec_create(tdho_spec** out);
void tdho_spec_destroy(tdho_spec* spec);

/* which: "w0sq" | "mass" | "gauge"; preset names and their parameter keys
 * match the scenario config format (const, step, mathieu, gaussian_pulse,
 * sinusoidal). */
tdho_status tdho_spec_set_profile(tdho_spec* spec, const char* which, const char* preset,
                                  const char* const* keys, const double* values, size_t n);
tdho_status tdho_spec_set_coupling(tdho_spec* spec, double g);
tdho_status tdho_spec_set_hbar(tdho_spec* spec, double hbar);
tdho_status tdho_spec_set_u1(tdho_spec* spec, double c_u, double c_v);

tdho_status tdho_alpha_of_g(double g, double hbar, double* alpha_out);

/* ---------------- classical trajectory ---------------- */

tdho_status tdho_solve_linear(const tdho_spec* spec, double t0, double t1, const double ics[4],
                              int n_samples, tdho_trajectory** out);
void tdho_trajectory_destroy(tdho_trajectory* traj);
int tdho_trajectory_size(const tdho_trajectory* traj);
double tdho_trajectory_omega0(const tdho_trajectory* traj);

/* field: "t" | "u0" | "du0" | "v0" | "dv0" | "rho0" | "drho0" | "tau" |
 *        "u1" | "du1" | "delta_u1" */
tdho_status tdho_trajectory_series(const tdho_trajectory* traj, const char* field, double* buf,
                                   size_t len);
tdho_status tdho_trajectory_wronskian_drift(const tdho_trajectory* traj, double* out);
tdho_status tdho_trajectory_ermakov_residual(const tdho_trajectory* traj, const tdho_spec* spec,
                                             double* out);

/* ---------------- wavefunctions ---------------- */

/* x_max <= 0 or grid_n <= 0 selects automatic grid sizing. */
tdho_status tdho_eval_psi0(const tdho_trajectory* traj, const tdho_spec* spec, int n,
                           int t_index, double x_max, int grid_n, tdho_wavefunction** out);
tdho_status tdho_eval_phi(const tdho_trajectory* traj, const tdho_spec* spec, int n, int t_index,
                          double x_max, int grid_n, tdho_wavefunction** out);
void tdho_wavefunction_destroy(tdho_wavefunction* psi);
int tdho_wavefunction_size(const tdho_wavefunction* psi);
tdho_status tdho_wavefunction_data(const tdho_wavefunction* psi, double* x, double* re,
                                   double* im, size_t len);
double tdho_wavefunction_norm(const tdho_wavefunction* psi);
double tdho_wavefunction_mean_x(const tdho_wavefunction* psi);
double tdho_wavefunction_var_x(const tdho_wavefunction* psi);

/* ---------------- scenarios ---------------- */

tdho_status tdho_scenario_parse(const char* text, tdho_scenario** out);
void tdho_scenario_destroy(tdho_scenario* sc);
tdho_status tdho_scenario_serialize(const tdho_scenario* sc, char** out);
void tdho_string_free(char* s);

/* Scalar overrides after parsing; key: "name" | "dt" | "grid_n" | "x_max" |
 * "modes" (space-separated list) | "span" | "store_every". */
tdho_status tdho_scenario_set(tdho_scenario* sc, const char* key, const char* value);
const char* tdho_scenario_name(const tdho_scenario* sc);

/* ---------------- runners ---------------- */

tdho_status tdho_run_verify(const tdho_scenario* sc, uint64_t seed, tdho_verify_report** out);
void tdho_verify_report_destroy(tdho_verify_report* rep);
int tdho_verify_report_size(const tdho_verify_report* rep);
int tdho_verify_report_pass(const tdho_verify_report* rep);
tdho_status tdho_verify_report_row(const tdho_verify_report* rep, int i, const char** name,
                                   double* value, double* threshold, const char** cmp,
                                   int* pass);

tdho_status tdho_run_phase(const tdho_scenario* sc, tdho_phase_report** out);
void tdho_phase_report_destroy(tdho_phase_report* rep);
int tdho_phase_report_periodic(const tdho_phase_report* rep);
double tdho_phase_report_t_prime(const tdho_phase_report* rep);
double tdho_phase_report_residual(const tdho_phase_report* rep);
int tdho_phase_report_size(const tdho_phase_report* rep);
int tdho_phase_report_pass(const tdho_phase_report* rep);
tdho_status tdho_phase_report_row(const tdho_phase_report* rep, int i, int* n, double* alpha,
                                  double* chi, double* dyn, double* gamma, double* gamma_alt,
                                  double* route_diff, int* pass);

tdho_status tdho_run_invariant(const tdho_scenario* sc, tdho_invariant_report** out);
void tdho_invariant_report_destroy(tdho_invariant_report* rep);
int tdho_invariant_report_size(const tdho_invariant_report* rep);
int tdho_invariant_report_pass(const tdho_invariant_report* rep);
tdho_status tdho_invariant_report_offdiag(const tdho_invariant_report* rep, double* i0,
                                          double* i_in);
tdho_status tdho_invariant_report_row(const tdho_invariant_report* rep, int i,
                                      const char** family, int* n, double* expected,
                                      double* value_t0, double* max_dev, int* pass);

tdho_status tdho_run_evolve(const tdho_scenario* sc, tdho_evolution** out);
void tdho_evolution_destroy(tdho_evolution* ev);
int tdho_evolution_n_times(const tdho_evolution* ev);
int tdho_evolution_n_modes(const tdho_evolution* ev);
int tdho_evolution_grid_size(const tdho_evolution* ev);
const char* tdho_evolution_family(const tdho_evolution* ev);
tdho_status tdho_evolution_grid(const tdho_evolution* ev, double* x, size_t len);
tdho_status tdho_evolution_times(const tdho_evolution* ev, double* t, size_t len);
/* field: "tau" | "rho" */
tdho_status tdho_evolution_series(const tdho_evolution* ev, const char* field, double* buf,
                                  size_t len);
tdho_status tdho_evolution_mode_index(const tdho_evolution* ev, int k, int* n);
/* field: "norm" | "mean_x" | "var_x" | "fidelity" */
tdho_status tdho_evolution_mode_series(const tdho_evolution* ev, int k, const char* field,
                                       double* buf, size_t len);
tdho_status tdho_evolution_state(const tdho_evolution* ev, int k, int time_index, double* re,
                                 double* im, size_t len);

#ifdef __cplusplus
}
#endif

#endif /* TDHO_H */
