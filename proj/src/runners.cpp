#include "tdho/runners.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tdho/errors.hpp"
#include "tdho/operators.hpp"
#include "tdho/parallel.hpp"
#include "tdho/transforms.hpp"

namespace tdho {

namespace {

ClassicalTrajectory solve_span(const OscillatorSpec& spec, const Scenario& sc, double span,
                               int n_samples) {
  return solve_linear(spec, sc.t0, sc.t0 + span, sc.ics, n_samples);
}

int samples_for_dt(double span, double dt) {
  return static_cast<int>(std::lround(span / dt)) + 1;
}

std::shared_ptr<const QuadratureGrid> grid_for(const Scenario& sc, const ClassicalTrajectory& traj,
                                               const OscillatorSpec& spec, int max_n,
                                               Domain domain, double margin = 1.0,
                                               int points_per_width = 40) {
  if (sc.x_max > 0.0 && sc.grid_n > 0) {
    return make_shared_grid(build_grid(domain, sc.x_max, sc.grid_n));
  }
  if (domain == Domain::full_line) {
    return make_shared_grid(suggest_grid_sho(traj, spec, max_n, margin, points_per_width));
  }
  return make_shared_grid(
      suggest_grid_inverse_square(traj, spec, max_n, margin, points_per_width));
}

std::vector<GridWavefunction> psi0_series(const ClassicalTrajectory& traj,
                                          const OscillatorSpec& spec, int n,
                                          std::shared_ptr<const QuadratureGrid> grid,
                                          bool flip_delta) {
  std::vector<GridWavefunction> out(traj.size());
  parallel_for(traj.size(), [&](std::size_t i) {
    ClassicalSnapshot s = ClassicalSnapshot::at_index(traj, i);
    if (flip_delta) s.delta = -s.delta;
    out[i] = psi_0(n, s, spec, grid);
  });
  return out;
}

std::vector<GridWavefunction> phi_series(const ClassicalTrajectory& traj,
                                         const OscillatorSpec& spec, int n,
                                         std::shared_ptr<const QuadratureGrid> grid) {
  std::vector<GridWavefunction> out(traj.size());
  parallel_for(traj.size(), [&](std::size_t i) {
    out[i] = phi(n, ClassicalSnapshot::at_index(traj, i), spec, grid);
  });
  return out;
}

GridWavefunction random_smooth_state(std::shared_ptr<const QuadratureGrid> grid, double hbar,
                                     std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  GridWavefunction acc;
  acc.grid = grid;
  acc.hbar = hbar;
  acc.values.assign(grid->size(), Complex{});
  for (int k = 0; k <= 6; ++k) {
    const Complex c(gauss(rng), gauss(rng));
    const GridWavefunction mode = psi_s(k, grid, 0.0, hbar);
    for (std::size_t i = 0; i < acc.size(); ++i) acc.values[i] += c * mode.values[i];
  }
  const double n = acc.norm();
  for (auto& v : acc.values) v /= n;
  return acc;
}

std::vector<std::size_t> spread_indices(std::size_t size, std::size_t count) {
  std::vector<std::size_t> idx;
  count = std::min(count, size);
  for (std::size_t k = 0; k < count; ++k) idx.push_back(k * (size - 1) / (count - 1));
  return idx;
}

CheckRow make_check(std::string name, double value, double threshold, std::string cmp) {
  CheckRow row;
  row.name = std::move(name);
  row.value = value;
  row.threshold = threshold;
  row.cmp = std::move(cmp);
  row.pass = (row.cmp == "<=")   ? (value <= threshold)
             : (row.cmp == ">=") ? (value >= threshold)
                                 : (value > threshold);
  return row;
}

}  // namespace

VerifyReport run_verify(const Scenario& sc, std::uint64_t seed) {
  sc.validate();
  const OscillatorSpec spec = sc.to_spec();
  const double span = sc.effective_span();
  std::mt19937_64 rng(seed);

  VerifyReport rep;
  rep.scenario_name = sc.name;
  rep.seed = seed;

  // Classical integrity on the scenario's own sampling.
  const ClassicalTrajectory traj_c = solve_span(spec, sc, span, sc.n_samples);
  rep.checks.push_back(make_check("wronskian_drift", wronskian_drift(traj_c), 1e-8, "<="));
  rep.checks.push_back(
      make_check("ermakov_residual", ermakov_residual(traj_c, spec), 1e-8, "<="));
  double min_dtau = 1e300;
  for (std::size_t i = 1; i < traj_c.size(); ++i)
    min_dtau = std::min(min_dtau, traj_c.tau[i] - traj_c.tau[i - 1]);
  rep.checks.push_back(make_check("tau_monotone_min_step", min_dtau, 0.0, ">"));

  // Fine trajectory matching the residual sampling step.
  const ClassicalTrajectory traj = solve_span(spec, sc, span, samples_for_dt(span, sc.dt));
  const int max_mode = *std::max_element(sc.modes.begin(), sc.modes.end());

  const auto grid_psi = grid_for(sc, traj, spec, std::max(max_mode, 8), Domain::full_line);
  const auto grid_phi = grid_for(sc, traj, spec, std::max(max_mode, 8), Domain::half_line);

  // Unitarity of the pointwise transform actions on a seeded smooth state.
  {
    const GridWavefunction psi = random_smooth_state(grid_psi, spec.hbar, rng);
    const double n0 = psi.norm();
    const double nw = apply_U_w0(psi, 1.3, 0.4, 1.2).norm();
    const double nf = apply_U_f(psi, 0.5, -0.3, 0.2).norm();
    const double ng = apply_U_g(psi, 1.6, 0.25, 0.15).norm();
    rep.checks.push_back(make_check("unitarity_U_w0", std::abs(nw / n0 - 1.0), 1e-8, "<="));
    rep.checks.push_back(make_check("unitarity_U_f", std::abs(nf / n0 - 1.0), 1e-8, "<="));
    rep.checks.push_back(make_check("unitarity_U_g", std::abs(ng / n0 - 1.0), 1e-8, "<="));
  }

  // Schroedinger residuals of the closed-form families.
  {
    const auto h0 = [&spec](double t) { return HamiltonianSpec::at(spec, t, HamKind::h0); };
    double worst = 0.0;
    for (int n : sc.modes) {
      const auto states = psi0_series(traj, spec, n, grid_psi, sc.flip_delta_u1_sign);
      worst = std::max(worst, schrodinger_residual(states, h0));
    }
    rep.checks.push_back(make_check("schrodinger_residual_psi0", worst, 1e-5, "<="));
  }
  {
    const auto hin = [&spec](double t) { return HamiltonianSpec::at(spec, t, HamKind::h_in); };
    double worst = 0.0;
    for (int n : sc.modes) {
      const auto states = phi_series(traj, spec, n, grid_phi);
      worst = std::max(worst, schrodinger_residual(states, hin));
    }
    rep.checks.push_back(make_check("schrodinger_residual_phi", worst, 1e-5, "<="));
  }

  // Orthonormality: 9x9 Gram matrices at spread sample times.
  {
    const auto idx = spread_indices(traj.size(), 5);
    double worst_psi = 0.0, worst_phi = 0.0;
    for (std::size_t i : idx) {
      std::vector<GridWavefunction> ps, ph;
      for (int n = 0; n < 9; ++n) {
        ps.push_back(psi_0(n, traj, spec, i, grid_psi));
        ph.push_back(phi(n, traj, spec, i, grid_phi));
      }
      for (int a = 0; a < 9; ++a) {
        for (int b = 0; b < 9; ++b) {
          const double expected = (a == b) ? 1.0 : 0.0;
          worst_psi = std::max(worst_psi, std::abs(ps[a].inner(ps[b]) - expected));
          worst_phi = std::max(worst_phi, std::abs(ph[a].inner(ph[b]) - expected));
        }
      }
    }
    rep.checks.push_back(make_check("orthonormality_psi0", worst_psi, 1e-7, "<="));
    rep.checks.push_back(make_check("orthonormality_phi", worst_phi, 1e-7, "<="));
  }

  // Invariant matrix-element constancy (I0 needs the u1 = 0 sector).
  {
    OscillatorSpec spec0 = spec;
    spec0.u1_coeffs = {0.0, 0.0};
    const ClassicalTrajectory traj_inv = solve_span(spec0, sc, span, 1025);
    const auto idx = spread_indices(traj_inv.size(), 25);
    constexpr int kModes = 6;

    std::vector<std::vector<GridWavefunction>> psi_sets(idx.size()), phi_sets(idx.size());
    parallel_for(idx.size(), [&](std::size_t k) {
      for (int n = 0; n < kModes; ++n) {
        psi_sets[k].push_back(psi_0(n, traj_inv, spec0, idx[k], grid_psi));
        phi_sets[k].push_back(phi(n, traj_inv, spec, idx[k], grid_phi));
      }
    });
    const double dev_i0 = invariance_check(
        [&](std::size_t k) { return QuadraticInvariant::i0_at(traj_inv, idx[k], spec.hbar); },
        psi_sets);
    const double dev_iin = invariance_check(
        [&](std::size_t k) { return QuadraticInvariant::i_in_at(traj_inv, spec, idx[k]); },
        phi_sets);
    rep.checks.push_back(make_check("invariance_I0", dev_i0, 1e-5, "<="));
    rep.checks.push_back(make_check("invariance_I_in", dev_iin, 1e-5, "<="));
  }

  // Composition law on the first five unit-frequency modes, two seeded draws.
  {
    const auto grid_comp =
        grid_for(sc, traj, spec, 6, Domain::full_line, 1.8, 80);
    std::vector<GridWavefunction> states;
    for (int n = 0; n <= 4; ++n) states.push_back(psi_s(n, grid_comp, 0.37, spec.hbar));
    const std::vector<double> probes = {sc.t0 + 0.21 * span, sc.t0 + 0.55 * span,
                                        sc.t0 + 0.89 * span};
    std::uniform_real_distribution<double> omega_draw(1.3, 2.2), cross_draw(-0.4, 0.4);
    double worst = 0.0;
    for (int rep_i = 0; rep_i < 2; ++rep_i) {
      RhoSParams rs;
      rs.omega_s = omega_draw(rng);
      rs.cross = cross_draw(rng);
      worst = std::max(worst, check_composition_law(traj, rs, states, probes));
    }
    rep.checks.push_back(make_check("composition_law", worst, 1e-7, "<="));
  }

  // Oracle fidelity: Crank-Nicolson from t0 across the span against the
  // closed forms.
  {
    const auto pick = [&](int prefer) {
      return std::count(sc.modes.begin(), sc.modes.end(), prefer) ? prefer : sc.modes.front();
    };
    const int n_psi = pick(2);
    const auto h0 = [&spec](double t) { return HamiltonianSpec::at(spec, t, HamKind::h0); };
    EvolutionConfig cfg;
    cfg.dt = sc.dt;
    cfg.t0 = sc.t0;
    cfg.t1 = sc.t0 + span;
    const auto res_psi = evolve(psi_0(n_psi, traj, spec, 0, grid_psi), h0, cfg);
    const double f_psi =
        fidelity(res_psi.samples.back(), psi_0(n_psi, traj, spec, traj.size() - 1, grid_psi));
    rep.checks.push_back(make_check("oracle_fidelity_psi0", f_psi, 1.0 - 1e-4, ">="));

    const int n_phi = pick(1);
    const auto hin = [&spec](double t) { return HamiltonianSpec::at(spec, t, HamKind::h_in); };
    const auto res_phi = evolve(phi(n_phi, traj, spec, 0, grid_phi), hin, cfg);
    const double f_phi =
        fidelity(res_phi.samples.back(), phi(n_phi, traj, spec, traj.size() - 1, grid_phi));
    rep.checks.push_back(make_check("oracle_fidelity_phi", f_phi, 1.0 - 1e-4, ">="));
  }

  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const CheckRow& c) { return c.pass; });
  return rep;
}

PhaseRunReport run_phase(const Scenario& sc) {
  sc.validate();
  require(sc.period.has_value(), ErrorCode::input_error,
          "phase: scenario declares no parameter period T");
  const OscillatorSpec spec = sc.to_spec();
  const double T = *sc.period;

  PhaseRunReport rep;
  rep.scenario_name = sc.name;
  rep.declared_period = T;

  const int n_samples = std::max(sc.n_samples + 1, 4097);
  const ClassicalTrajectory traj = solve_span(spec, sc, 4.0 * T, n_samples);

  double residual = 0.0;
  const auto t_prime = detect_period(traj, spec, T, &residual);
  if (!t_prime) {
    rep.periodic = false;
    rep.pass = false;
    return rep;
  }
  rep.periodic = true;
  rep.t_prime = *t_prime;
  rep.periodicity_residual = residual;

  rep.rows.resize(sc.modes.size());
  parallel_for(sc.modes.size(), [&](std::size_t k) {
    PhaseModeRow row;
    row.report = geometric_phase(sc.modes[k], traj, spec, *t_prime, residual,
                                 /*enforce_consistency=*/false);
    row.pass = row.report.route_difference <= 1e-5;
    rep.rows[k] = row;
  });
  rep.pass = std::all_of(rep.rows.begin(), rep.rows.end(),
                         [](const PhaseModeRow& r) { return r.pass; });
  return rep;
}

InvariantRunReport run_invariant(const Scenario& sc) {
  sc.validate();
  const OscillatorSpec spec = sc.to_spec();
  OscillatorSpec spec0 = spec;
  spec0.u1_coeffs = {0.0, 0.0};
  const double span = sc.effective_span();
  const double alpha = alpha_of_g(spec.g, spec.hbar);

  InvariantRunReport rep;
  rep.scenario_name = sc.name;

  const ClassicalTrajectory traj = solve_span(spec0, sc, span, std::max(sc.n_samples, 1025));
  constexpr int kModes = 6;
  const auto grid_psi = grid_for(sc, traj, spec, 8, Domain::full_line);
  const auto grid_phi = grid_for(sc, traj, spec, 8, Domain::half_line);
  const auto idx = spread_indices(traj.size(), 25);

  struct Sector {
    std::string family;
    std::vector<std::vector<Complex>> diag;  // [time][mode]
    double offdiag = 0.0;
  };
  Sector s_i0{"I0", {}, 0.0}, s_iin{"I_in", {}, 0.0};
  s_i0.diag.resize(idx.size());
  s_iin.diag.resize(idx.size());

  std::vector<double> off_i0(idx.size(), 0.0), off_iin(idx.size(), 0.0);
  parallel_for(idx.size(), [&](std::size_t k) {
    std::vector<GridWavefunction> ps, ph, ips, iph;
    const auto inv0 = QuadraticInvariant::i0_at(traj, idx[k], spec.hbar).coeffs();
    const auto invin = QuadraticInvariant::i_in_at(traj, spec, idx[k]).coeffs();
    for (int n = 0; n < kModes; ++n) {
      ps.push_back(psi_0(n, traj, spec0, idx[k], grid_psi));
      ph.push_back(phi(n, traj, spec, idx[k], grid_phi));
      ips.push_back(apply_operator(inv0, ps.back()));
      iph.push_back(apply_operator(invin, ph.back()));
    }
    s_i0.diag[k].resize(kModes);
    s_iin.diag[k].resize(kModes);
    for (int a = 0; a < kModes; ++a) {
      for (int b = 0; b < kModes; ++b) {
        const Complex e0 = ps[a].inner(ips[b]);
        const Complex ei = ph[a].inner(iph[b]);
        if (a == b) {
          s_i0.diag[k][a] = e0;
          s_iin.diag[k][a] = ei;
        } else {
          off_i0[k] = std::max(off_i0[k], std::abs(e0));
          off_iin[k] = std::max(off_iin[k], std::abs(ei));
        }
      }
    }
  });
  for (double v : off_i0) rep.offdiag_deviation_i0 = std::max(rep.offdiag_deviation_i0, v);
  for (double v : off_iin) rep.offdiag_deviation_i_in = std::max(rep.offdiag_deviation_i_in, v);

  for (int n = 0; n < kModes; ++n) {
    InvariantModeRow r0;
    r0.family = "I0";
    r0.n = n;
    r0.expected = spec.hbar * (n + 0.5);
    r0.value_t0 = s_i0.diag[0][n].real();
    for (std::size_t k = 0; k < idx.size(); ++k)
      r0.max_diag_deviation =
          std::max(r0.max_diag_deviation, std::abs(s_i0.diag[k][n] - Complex(r0.expected)));
    r0.pass = r0.max_diag_deviation <= 1e-5;
    rep.rows.push_back(r0);

    InvariantModeRow ri;
    ri.family = "I_in";
    ri.n = n;
    ri.expected = spec.hbar * (2.0 * n + alpha + 1.0);
    ri.value_t0 = s_iin.diag[0][n].real();
    for (std::size_t k = 0; k < idx.size(); ++k)
      ri.max_diag_deviation =
          std::max(ri.max_diag_deviation, std::abs(s_iin.diag[k][n] - Complex(ri.expected)));
    ri.pass = ri.max_diag_deviation <= 1e-5;
    rep.rows.push_back(ri);
  }

  rep.pass = rep.offdiag_deviation_i0 <= 1e-5 && rep.offdiag_deviation_i_in <= 1e-5 &&
             std::all_of(rep.rows.begin(), rep.rows.end(),
                         [](const InvariantModeRow& r) { return r.pass; });
  return rep;
}

EvolveRunReport run_evolve(const Scenario& sc) {
  sc.validate();
  const OscillatorSpec spec = sc.to_spec();
  const double span = sc.effective_span();
  const bool inverse_square = (sc.g != 0.0);

  EvolveRunReport rep;
  rep.scenario_name = sc.name;
  rep.family = inverse_square ? "phi" : "psi0";

  const ClassicalTrajectory traj = solve_span(spec, sc, span, samples_for_dt(span, sc.dt));
  const int max_mode = *std::max_element(sc.modes.begin(), sc.modes.end());
  rep.grid = grid_for(sc, traj, spec, max_mode,
                      inverse_square ? Domain::half_line : Domain::full_line);

  const auto n_steps = static_cast<std::size_t>(std::lround(span / sc.dt));
  const int store_every =
      sc.store_every > 0 ? sc.store_every
                         : std::max<int>(1, static_cast<int>(n_steps / 50));

  const auto ham_kind = inverse_square ? HamKind::h_in : HamKind::h0;
  const auto ham = [&spec, ham_kind](double t) { return HamiltonianSpec::at(spec, t, ham_kind); };

  rep.modes.resize(sc.modes.size());
  parallel_for(sc.modes.size(), [&](std::size_t k) {
    const int n = sc.modes[k];
    EvolveModeSeries series;
    series.n = n;
    const GridWavefunction psi_init =
        inverse_square ? phi(n, traj, spec, 0, rep.grid) : psi_0(n, traj, spec, 0, rep.grid);
    EvolutionConfig cfg;
    cfg.dt = sc.dt;
    cfg.t0 = sc.t0;
    cfg.t1 = sc.t0 + span;
    cfg.store_every = store_every;
    auto res = evolve(psi_init, ham, cfg);
    for (std::size_t s = 0; s < res.samples.size(); ++s) {
      const auto& st = res.samples[s];
      series.norms.push_back(st.norm());
      series.mean_xs.push_back(st.mean_x());
      series.var_xs.push_back(st.var_x());
      const auto snap = ClassicalSnapshot::at_time(traj, res.sample_times[s], spec);
      const GridWavefunction ana =
          inverse_square ? phi(n, snap, spec, rep.grid) : psi_0(n, snap, spec, rep.grid);
      series.fidelity_vs_analytic.push_back(fidelity(st, ana));
    }
    series.samples = std::move(res.samples);
    if (k == 0) {
      rep.times = res.sample_times;
    }
    rep.modes[k] = std::move(series);
  });

  for (double t : rep.times) {
    const auto st = traj.at(t);
    const double m = spec.mass(t);
    rep.tau.push_back(st.tau);
    rep.rho.push_back(st.rho0 / std::sqrt(m));
  }
  return rep;
}

}  // namespace tdho
