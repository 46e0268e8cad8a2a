#include "abc/verification.hpp"

#include "abc/errors.hpp"
#include "abc/oracle.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace abc {

namespace {

std::vector<FluxParam> exact_fluxes(std::initializer_list<std::pair<int, int>> values) {
  std::vector<FluxParam> out;
  for (auto [p, q] : values) out.push_back(FluxParam::exact(Rational(p, q)));
  return out;
}

VerificationGrid make_grid(int nq_max_3d, int k_max_3d, const std::vector<FluxParam>& mu3,
                           const std::vector<double>& charges, int n_max_2d, int k_max_2d,
                           const std::vector<FluxParam>& mu2) {
  VerificationGrid g;
  for (double Z : charges)
    for (const auto& mu : mu3)
      for (int n = 0; n <= nq_max_3d; ++n)
        for (int q = 0; q <= nq_max_3d; ++q)
          for (int k = -k_max_3d; k <= k_max_3d; ++k) g.states_3d.emplace_back(n, q, k, mu, Z);
  for (const auto& mu : mu2)
    for (int n = 0; n <= n_max_2d; ++n)
      for (int k = -k_max_2d; k <= k_max_2d; ++k) g.states_2d.emplace_back(n, k, mu, 1.0);
  return g;
}

// Runs one block of checks; an unexpected exception becomes a failed report
// rather than tearing down the whole grid.
void guarded(std::vector<CheckReport>& out, const StateLabel& label, const std::string& block,
             const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    CheckReport r;
    r.name = block + "_error";
    r.state = label;
    r.lhs = r.rhs = std::nan("");
    r.abs_err = r.rel_err = std::numeric_limits<double>::infinity();
    r.pass = false;
    out.push_back(std::move(r));
  }
}

// Positive and negative parts of the recurrence, so the comparison is relative
// to the size of the terms rather than to a residual near zero.
template <class T>
std::pair<T, T> recurrence_sides(const RadialParams<T>& p, int lambda, const T& m2, const T& m1,
                                 const T& m0) {
  const T l(lambda);
  const T s = 2 * p.alpha + 1;
  const T terms[3] = {(l + 1) / (p.n_eff * p.n_eff) * m0, -(2 * l + 1) * m1,
                      l / 4 * (s * s - l * l) * m2};
  T pos(0), neg(0);
  for (const T& t : terms) (t > 0 ? pos : neg) += (t > 0 ? t : -t);
  return {pos, neg};
}

constexpr double kRecurrenceTol = 1e-10;
constexpr double kKineticTol = 1e-9;
constexpr double kFloatVsExactTol = 1e-12;
constexpr double kClosedTol = 1e-12;

// Engine against oracle for every lambda in the grid range. Fills the oracle
// and exact-engine maps used by the later blocks.
template <class State, class EngineFn>
void moment_block(std::vector<CheckReport>& out, const State& state, const StateLabel& label,
                  const RadialWavefunction& wf, const VerificationGrid& grid,
                  const VerifyOptions& opts, bool exact, EngineFn engine,
                  std::map<int, double>& oracle_vals, std::map<int, Rational>& exact_vals) {
  for (int l = grid.lambda_min; l <= grid.lambda_max; ++l) {
    std::optional<double> eng;
    bool eng_div = false;
    try {
      eng = engine(state, l, Mode::Float).to_double();
    } catch (const DivergentMoment&) {
      eng_div = true;
    }
    std::optional<OracleEvaluation> orc;
    bool orc_div = false;
    try {
      orc = oracle_moment_paths(wf, l);
    } catch (const DivergentMoment&) {
      orc_div = true;
    }
    if (eng_div || orc_div) {
      out.push_back(make_report("divergence_agrees", label, eng_div ? 1.0 : 0.0,
                                orc_div ? 1.0 : 0.0, 0.0, l));
      continue;
    }
    out.push_back(make_report("oracle_paths", label, orc->series, orc->quadrature,
                              kOraclePathTolerance, l));
    out.push_back(make_report("engine_vs_oracle", label, *eng, orc->series, opts.tol, l));
    oracle_vals[l] = orc->series;
    if (exact) {
      const Rational r = engine(state, l, Mode::Exact).exact();
      exact_vals.emplace(l, r);
      out.push_back(make_report("engine_float_vs_exact", label, *eng, to_double(r),
                                kFloatVsExactTol, l));
    }
  }
}

template <class State>
void recurrence_block(std::vector<CheckReport>& out, const State& state, const StateLabel& label,
                      const std::map<int, double>& oracle_vals,
                      const std::map<int, Rational>& exact_vals, bool exact) {
  const auto p = state.radial();
  for (const auto& [l, m0] : oracle_vals) {
    if (!oracle_vals.count(l - 1) || !oracle_vals.count(l - 2)) continue;
    if (!engine::recurrence_valid(p, l)) continue;
    const auto [pos, neg] =
        recurrence_sides(p, l, oracle_vals.at(l - 2), oracle_vals.at(l - 1), m0);
    out.push_back(make_report("recurrence_oracle", label, pos, neg, kRecurrenceTol, l));
  }
  if (!exact) return;
  const auto pe = state.radial_exact();
  for (const auto& [l, m0] : exact_vals) {
    if (!exact_vals.count(l - 1) || !exact_vals.count(l - 2)) continue;
    if (!engine::recurrence_valid(pe, l)) continue;
    const auto [pos, neg] =
        recurrence_sides(pe, l, exact_vals.at(l - 2), exact_vals.at(l - 1), m0);
    out.push_back(make_exact_report("recurrence_exact", label, pos, neg, l));
  }
}

template <class State, class ClosedFn>
void closed_form_block(std::vector<CheckReport>& out, const State& state, const StateLabel& label,
                       const VerifyOptions& opts, const std::map<int, double>& oracle_vals,
                       const std::map<int, Rational>& exact_vals, ClosedFn closed) {
  for (int l : {-4, -3, -2, -1, 1, 2}) {
    if (exact_vals.count(l))
      out.push_back(make_exact_report("closed_form_exact", label,
                                      closed(state, l, Mode::Exact, opts.coeffs).exact(),
                                      exact_vals.at(l), l));
    if (oracle_vals.count(l))
      out.push_back(make_report("closed_form_vs_oracle", label,
                                closed(state, l, Mode::Float, opts.coeffs).to_double(),
                                oracle_vals.at(l), opts.tol, l));
  }
}

}  // namespace

VerificationGrid default_grid() {
  return make_grid(4, 2, exact_fluxes({{0, 1}, {1, 10}, {1, 4}, {1, 2}, {9, 10}}), {1.0, 2.0}, 3,
                   2, exact_fluxes({{0, 1}, {1, 4}, {1, 2}}));
}

VerificationGrid small_grid() {
  const auto mu = exact_fluxes({{0, 1}, {1, 2}});
  return make_grid(1, 1, mu, {1.0}, 1, 1, mu);
}

std::vector<CheckReport> verify_state(const QuantumState3D& state, const VerificationGrid& grid,
                                      const VerifyOptions& opts) {
  std::vector<CheckReport> out;
  const auto label = StateLabel::of(state);
  const bool exact = state.flux().exact_mu0().has_value();
  std::map<int, double> oracle_vals;
  std::map<int, Rational> exact_vals;
  std::optional<RadialWavefunction> wf;

  guarded(out, label, "moments", [&] {
    wf.emplace(state);
    moment_block(out, state, label, *wf, grid, opts, exact,
                 [](const QuantumState3D& s, int l, Mode m) { return moment(s, l, m); },
                 oracle_vals, exact_vals);
  });
  guarded(out, label, "recurrence",
          [&] { recurrence_block(out, state, label, oracle_vals, exact_vals, exact); });
  guarded(out, label, "closed_form", [&] {
    closed_form_block(out, state, label, opts, oracle_vals, exact_vals,
                      [](const QuantumState3D& s, int l, Mode m, const ClosedFormCoefficients& c) {
                        return closed_form_moment(s, l, m, c);
                      });
  });

  // int r^l u'^2 = [l(l-1)/2 - alpha(alpha+1)] <r^{l-2}> + 2 <r^{l-1}> - <r^l>/n^2
  guarded(out, label, "kinetic_identity", [&] {
    if (!wf) return;
    const double a = state.alpha();
    const double n2 = state.n_eff() * state.n_eff();
    for (const auto& [l, m0] : oracle_vals) {
      if (!oracle_vals.count(l - 1) || !oracle_vals.count(l - 2)) continue;
      if (!(l > -(2.0 * a + 1.0))) continue;
      const double lhs = kinetic_weighted_integral(*wf, l);
      const double rhs = (0.5 * l * (l - 1) - a * (a + 1.0)) * oracle_vals.at(l - 2) +
                         2.0 * oracle_vals.at(l - 1) - m0 / n2;
      out.push_back(make_report("kinetic_identity", label, lhs, rhs, kKineticTol, l));
    }
  });

  guarded(out, label, "virial", [&] {
    for (auto& r : virial_check(state, opts.tol)) out.push_back(std::move(r));
  });

  if (state.alpha() > 0.0) {
    guarded(out, label, "schwinger", [&] {
      if (exact) out.push_back(schwinger_check(state, Mode::Exact));
      out.push_back(schwinger_check(state, Mode::Float, opts.tol));
    });
  }

  if (state.n() == 0) {
    guarded(out, label, "orbit", [&] {
      const auto closed = orbit_stats(state);
      const auto measured = orbit_stats_from_moments(state);
      out.push_back(make_report("orbit_r_most", label, measured.r_most, closed.r_most, opts.tol));
      out.push_back(make_report("orbit_r_mean", label, measured.r_mean, closed.r_mean, kClosedTol));
      out.push_back(
          make_report("orbit_delta_r", label, measured.delta_r, closed.delta_r, kClosedTol));
      out.push_back(make_report("orbit_ratio", label, measured.ratio, closed.ratio, kClosedTol));
      if (exact)
        out.push_back(make_exact_report("fluctuation_ratio_exact", label,
                                        fluctuation_ratio_squared_exact(state),
                                        1 / (2 * state.n_eff_exact() + 1)));
    });
    guarded(out, label, "kinetic_ratio", [&] {
      const auto k = kinetic_ratios(state);
      out.push_back(make_report("kinetic_ratio_c", label, k.r_c_oracle, k.r_c, opts.tol));
      out.push_back(make_report("kinetic_ratio_r", label, k.r_r_oracle, k.r_r, opts.tol));
      if (exact) {
        const auto [rc, rr] = kinetic_ratios_exact(state);
        out.push_back(make_exact_report("kinetic_ratio_sum_exact", label, rc + rr, Rational(1)));
      }
    });
  }

  if (exact) {
    guarded(out, label, "gauge", [&] {
      for (int m : {-1, 1})
        for (int l : {-2, 1, 2}) {
          const auto shifted = state.gauge_shifted(m);
          out.push_back(make_exact_report("gauge_shift_exact", label,
                                          moment(shifted, l, Mode::Exact).exact(),
                                          moment(state, l, Mode::Exact).exact(), l));
        }
    });
  }
  return out;
}

std::vector<CheckReport> verify_state(const QuantumState2D& state, const VerificationGrid& grid,
                                      const VerifyOptions& opts) {
  std::vector<CheckReport> out;
  const auto label = StateLabel::of(state);
  const bool exact = state.flux().exact_mu0().has_value();
  std::map<int, double> oracle_vals;
  std::map<int, Rational> exact_vals;

  guarded(out, label, "moments", [&] {
    const RadialWavefunction wf(state);
    moment_block(out, state, label, wf, grid, opts, exact,
                 [](const QuantumState2D& s, int l, Mode m) { return moment_2d(s, l, m); },
                 oracle_vals, exact_vals);
  });
  guarded(out, label, "recurrence",
          [&] { recurrence_block(out, state, label, oracle_vals, exact_vals, exact); });
  guarded(out, label, "closed_form", [&] {
    closed_form_block(out, state, label, opts, oracle_vals, exact_vals,
                      [](const QuantumState2D& s, int l, Mode m, const ClosedFormCoefficients& c) {
                        return closed_form_moment_2d(s, l, m, c);
                      });
  });
  guarded(out, label, "planar_closed_form", [&] {
    for (int l : {-3, -2, -1}) {
      if (exact_vals.count(l))
        out.push_back(make_exact_report("planar_closed_form_exact", label,
                                        planar_closed_form(state, l, Mode::Exact).exact(),
                                        exact_vals.at(l), l));
      if (oracle_vals.count(l))
        out.push_back(make_report("planar_closed_form_vs_oracle", label,
                                  planar_closed_form(state, l).to_double(), oracle_vals.at(l),
                                  opts.tol, l));
    }
  });
  return out;
}

namespace {

std::vector<CheckReport> check_index(const VerificationGrid& grid, const VerifyOptions& opts,
                                     std::size_t i) {
  const std::size_t n3 = grid.states_3d.size();
  return i < n3 ? verify_state(grid.states_3d[i], grid, opts)
                : verify_state(grid.states_2d[i - n3], grid, opts);
}

std::vector<CheckReport> flatten(std::vector<std::vector<CheckReport>>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<CheckReport> out;
  out.reserve(total);
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

}  // namespace

std::vector<CheckReport> verify_serial(const VerificationGrid& grid, const VerifyOptions& opts) {
  std::vector<std::vector<CheckReport>> parts(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) parts[i] = check_index(grid, opts, i);
  return flatten(parts);
}

std::vector<CheckReport> verify_parallel(const VerificationGrid& grid, const VerifyOptions& opts) {
  std::vector<std::vector<CheckReport>> parts(grid.size());
  const auto total = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < total; ++i) parts[i] = check_index(grid, opts, static_cast<std::size_t>(i));
  return flatten(parts);
}

VerifySummary summarize(const std::vector<CheckReport>& reports) {
  VerifySummary s;
  s.n_checks = reports.size();
  for (const auto& r : reports) {
    if (!r.pass) {
      s.pass = false;
      ++s.n_failed;
    }
    // Divergence-agreement flags and exact checks carry no float error.
    if (std::isfinite(r.rel_err) && r.rel_err > s.max_rel_err) s.max_rel_err = r.rel_err;
  }
  return s;
}

namespace {

template <class State>
MomentTable table_serial(const std::vector<State>& states, const std::vector<int>& lambdas,
                         Mode mode, bool with_oracle) {
  MomentTable t;
  t.mode = mode;
  t.rows.reserve(states.size() * lambdas.size());
  for (const auto& s : states)
    for (int l : lambdas) t.rows.push_back(moment_row(s, l, mode, with_oracle));
  return t;
}

template <class State>
MomentTable table_parallel(const std::vector<State>& states, const std::vector<int>& lambdas,
                           Mode mode, bool with_oracle) {
  MomentTable t;
  t.mode = mode;
  t.rows.resize(states.size() * lambdas.size());
  const auto total = static_cast<long>(t.rows.size());
  const auto per_state = static_cast<long>(lambdas.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < total; ++i)
    t.rows[i] = moment_row(states[i / per_state], lambdas[i % per_state], mode, with_oracle);
  return t;
}

}  // namespace

MomentTable moment_table_serial(const std::vector<QuantumState3D>& states,
                                const std::vector<int>& lambdas, Mode mode, bool with_oracle) {
  return table_serial(states, lambdas, mode, with_oracle);
}
MomentTable moment_table_parallel(const std::vector<QuantumState3D>& states,
                                  const std::vector<int>& lambdas, Mode mode, bool with_oracle) {
  return table_parallel(states, lambdas, mode, with_oracle);
}
MomentTable moment_table_serial(const std::vector<QuantumState2D>& states,
                                const std::vector<int>& lambdas, Mode mode, bool with_oracle) {
  return table_serial(states, lambdas, mode, with_oracle);
}
MomentTable moment_table_parallel(const std::vector<QuantumState2D>& states,
                                  const std::vector<int>& lambdas, Mode mode, bool with_oracle) {
  return table_parallel(states, lambdas, mode, with_oracle);
}

}  // namespace abc
