#include "abc/theorems.hpp"

#include "abc/errors.hpp"
#include "abc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace abc {

StateLabel StateLabel::of(const QuantumState3D& s) {
  return {3, s.n(), s.q(), s.k(), s.flux().mu0(), s.flux().to_string(), s.Z()};
}

StateLabel StateLabel::of(const QuantumState2D& s) {
  return {2, s.n(), 0, s.k(), s.flux().mu0(), s.flux().to_string(), s.Z()};
}

CheckReport make_report(std::string name, const StateLabel& state, double lhs, double rhs,
                        double tol, std::optional<int> lambda) {
  CheckReport r;
  r.name = std::move(name);
  r.state = state;
  r.lambda = lambda;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  if (rhs != 0.0)
    r.rel_err = r.abs_err / std::abs(rhs);
  else
    r.rel_err = r.abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  r.tol = tol;
  r.pass = r.rel_err <= tol || r.abs_err <= tol * std::max(1.0, std::abs(lhs));
  return r;
}

CheckReport make_exact_report(std::string name, const StateLabel& state, const Rational& lhs,
                              const Rational& rhs, std::optional<int> lambda) {
  CheckReport r = make_report(std::move(name), state, to_double(lhs), to_double(rhs), 0.0, lambda);
  r.exact = true;
  r.pass = lhs == rhs;
  if (r.pass) {
    r.abs_err = 0.0;
    r.rel_err = 0.0;
  }
  return r;
}

// ---------------------------------------------------------------- virial

std::vector<CheckReport> virial_check(const QuantumState3D& state, double tol) {
  const RadialWavefunction wf(state);
  const double Z2 = state.Z() * state.Z();
  const double alpha = state.alpha();
  // energies in e^2/a0; reduced moments carry (Z/a0)^{-lambda}
  const double radial_kinetic = 0.5 * kinetic_weighted_integral(wf, 0) * Z2;
  const double centrifugal = 0.5 * alpha * (alpha + 1.0) * oracle_moment(wf, -2.0) * Z2;
  const double kinetic = radial_kinetic + centrifugal;
  const double inv_r = oracle_moment(wf, -1.0) * state.Z();
  const double potential = -state.Z() * inv_r;
  const double r_dv_dr = state.Z() * inv_r;
  const double energy = energy_3d(state);

  const auto label = StateLabel::of(state);
  return {make_report("virial", label, 2.0 * kinetic, r_dv_dr, tol),
          make_report("virial_kinetic", label, kinetic, -energy, tol),
          make_report("virial_potential", label, potential, 2.0 * energy, tol)};
}

VirialPartition virial_partition(double nu, double energy) {
  return {nu / (nu + 2.0) * energy, 2.0 / (nu + 2.0) * energy};
}

// ---------------------------------------------------------------- Schwinger

CheckReport schwinger_check(const QuantumState3D& state, Mode mode, double tol) {
  const auto label = StateLabel::of(state);
  if (mode == Mode::Exact) {
    const Rational alpha = state.alpha_exact();
    if (alpha == 0) throw SWaveExcluded("generalized Schwinger identity needs alpha > 0");
    const Rational Z = exact_charge(state.Z());
    const Rational Z3 = Z * Z * Z;
    const Rational lhs = Z3 * moment(state, -2, Mode::Exact).exact();
    const Rational rhs = alpha * (alpha + 1) * Z3 * moment(state, -3, Mode::Exact).exact();
    return make_exact_report("schwinger_exact", label, lhs, rhs);
  }
  const double alpha = state.alpha();
  if (alpha == 0.0) throw SWaveExcluded("generalized Schwinger identity needs alpha > 0");
  const RadialWavefunction wf(state);
  const double Z3 = std::pow(state.Z(), 3);
  const double lhs = Z3 * oracle_moment(wf, -2.0);
  const double rhs = alpha * (alpha + 1.0) * Z3 * oracle_moment(wf, -3.0);
  return make_report("schwinger_oracle", label, lhs, rhs, tol);
}

// ---------------------------------------------------------------- circular orbits

namespace {

void require_circular(const QuantumState3D& state) {
  if (state.n() != 0)
    throw NotCircular("circular-orbit quantities need n = 0, got n = " + std::to_string(state.n()));
}

}  // namespace

OrbitStats orbit_stats(const QuantumState3D& state) {
  require_circular(state);
  const double n = state.n_eff();
  OrbitStats s;
  s.r_most = n * n;
  s.r_mean = n * n + 0.5 * n;
  s.delta_r = std::sqrt(0.5 * n * n * n + 0.25 * n * n);
  s.ratio = 1.0 / std::sqrt(2.0 * n + 1.0);
  return s;
}

OrbitStats orbit_stats_from_moments(const QuantumState3D& state) {
  require_circular(state);
  OrbitStats s;
  s.r_most = RadialWavefunction(state).most_probable_radius() * state.Z();
  s.r_mean = moment(state, 1).to_double();
  const double r2 = moment(state, 2).to_double();
  s.delta_r = std::sqrt(r2 - s.r_mean * s.r_mean);
  s.ratio = s.delta_r / s.r_mean;
  return s;
}

Rational fluctuation_ratio_squared_exact(const QuantumState3D& state) {
  const Rational r1 = moment(state, 1, Mode::Exact).exact();
  const Rational r2 = moment(state, 2, Mode::Exact).exact();
  return (r2 - r1 * r1) / (r1 * r1);
}

KineticRatios kinetic_ratios(const QuantumState3D& state) {
  require_circular(state);
  const double alpha = state.alpha();
  const double n = state.n_eff();
  KineticRatios k;
  k.r_c = alpha * (alpha + 1.0) / ((alpha + 0.5) * n);
  k.r_r = 1.0 / (2.0 * n - 1.0);

  const RadialWavefunction wf(state);
  const double radial = 0.5 * kinetic_weighted_integral(wf, 0);
  const double centrifugal = 0.5 * alpha * (alpha + 1.0) * oracle_moment(wf, -2.0);
  const double total = radial + centrifugal;
  k.r_c_oracle = centrifugal / total;
  k.r_r_oracle = radial / total;
  return k;
}

std::pair<Rational, Rational> kinetic_ratios_exact(const QuantumState3D& state) {
  require_circular(state);
  const Rational alpha = state.alpha_exact();
  const Rational n = state.n_eff_exact();
  Rational r_c = alpha * (alpha + 1) / ((alpha + Rational(1, 2)) * n);
  Rational r_r = 1 / (2 * n - 1);
  return {r_c, r_r};
}

// ---------------------------------------------------------------- tables

namespace {

template <class State, class EngineFn, class OracleFn>
MomentRow make_row(const State& state, int lambda, Mode mode, bool with_oracle, EngineFn engine,
                   OracleFn oracle) {
  MomentRow row;
  row.state = StateLabel::of(state);
  row.lambda = lambda;
  try {
    row.engine = engine(state, lambda, mode).value;
  } catch (const Error& e) {
    row.status = std::string(to_string(e.kind()));
  }
  if (with_oracle) {
    try {
      row.oracle = oracle(state, static_cast<double>(lambda));
    } catch (const Error& e) {
      if (row.status == "ok") row.status = std::string(to_string(e.kind()));
    }
  }
  if (row.engine && row.oracle) {
    const double v = to_double(*row.engine);
    row.rel_err = std::abs(v - *row.oracle) / std::abs(*row.oracle);
  }
  return row;
}

}  // namespace

MomentRow moment_row(const QuantumState3D& state, int lambda, Mode mode, bool with_oracle) {
  return make_row(state, lambda, mode, with_oracle,
                  [](const QuantumState3D& s, int l, Mode m) { return moment(s, l, m); },
                  [](const QuantumState3D& s, double l) { return oracle_moment(s, l); });
}

MomentRow moment_row(const QuantumState2D& state, int lambda, Mode mode, bool with_oracle) {
  return make_row(state, lambda, mode, with_oracle,
                  [](const QuantumState2D& s, int l, Mode m) { return moment_2d(s, l, m); },
                  [](const QuantumState2D& s, double l) { return oracle_moment_2d(s, l); });
}

namespace {

bool follows(Trend trend, const MomentValue& a, const MomentValue& b) {
  if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b)) {
    const auto& x = std::get<Rational>(a);
    const auto& y = std::get<Rational>(b);
    switch (trend) {
      case Trend::Increasing: return y > x;
      case Trend::Decreasing: return y < x;
      case Trend::Constant: return y == x;
    }
  }
  const double x = to_double(a), y = to_double(b);
  switch (trend) {
    case Trend::Increasing: return y > x;
    case Trend::Decreasing: return y < x;
    case Trend::Constant: return y == x;
  }
  return false;
}

}  // namespace

FluxSweep flux_sweep(const QuantumState3D& tmpl, std::span<const FluxParam> mu0_grid, int lambda,
                     Mode mode, bool with_oracle) {
  FluxSweep sweep;
  sweep.table.mode = mode;
  for (const auto& flux : mu0_grid) {
    const QuantumState3D state(tmpl.n(), tmpl.q(), tmpl.k(), flux, tmpl.Z());
    sweep.table.rows.push_back(moment_row(state, lambda, mode, with_oracle));
  }

  const bool ground = tmpl.n() == 0 && tmpl.q() == 0 && tmpl.k() == 0;
  bool ordered_unit_interval = true;
  for (std::size_t i = 0; i < mu0_grid.size(); ++i) {
    const double m = mu0_grid[i].mu0();
    if (m < 0.0 || m >= 1.0) ordered_unit_interval = false;
    if (i > 0 && !(m > mu0_grid[i - 1].mu0())) ordered_unit_interval = false;
  }
  if (!ground || !ordered_unit_interval) return sweep;

  switch (lambda) {
    case -1: sweep.expected = Trend::Decreasing; break;
    case 0: sweep.expected = Trend::Constant; break;
    case 1:
    case 2: sweep.expected = Trend::Increasing; break;
    default: return sweep;
  }
  const auto& rows = sweep.table.rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].engine) {
      sweep.postcondition = false;
      break;
    }
    if (i > 0 && !follows(*sweep.expected, *rows[i - 1].engine, *rows[i].engine)) {
      sweep.postcondition = false;
      break;
    }
  }
  return sweep;
}

}  // namespace abc
