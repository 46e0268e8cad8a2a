#pragma once

// Physical identities over engine and oracle outputs, each reported as a
// CheckReport.

#include "abc/core_model.hpp"
#include "abc/moment_engine.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace abc {

/// Printable identity of a state, shared by check reports and table rows.
struct StateLabel {
  int dimension = 3;
  int n = 0;
  int q = 0;  // unused in 2D
  int k = 0;
  double mu0 = 0.0;
  std::string mu0_text = "0";
  double Z = 1.0;

  static StateLabel of(const QuantumState3D& s);
  static StateLabel of(const QuantumState2D& s);
};

struct CheckReport {
  std::string name;
  StateLabel state;
  std::optional<int> lambda;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool exact = false;  // compared as rationals
  bool pass = false;
};

/// pass <=> rel_err <= tol or abs_err <= tol * max(1, |lhs|).
CheckReport make_report(std::string name, const StateLabel& state, double lhs, double rhs,
                        double tol, std::optional<int> lambda = std::nullopt);
/// Exact equality of two rationals; lhs/rhs/errors are the double images.
CheckReport make_exact_report(std::string name, const StateLabel& state, const Rational& lhs,
                              const Rational& rhs, std::optional<int> lambda = std::nullopt);

/// 2<T> = <r dV/dr>, <T> = -E and <V> = 2E in e^2/a0, with <T> assembled from
/// oracle integrals: the radial kinetic term from the analytic derivative,
/// the centrifugal term from the oracle <r^-2>.
std::vector<CheckReport> virial_check(const QuantumState3D& state, double tol = 1e-8);

/// <T> and <V> for a homogeneous potential of degree nu: nu/(nu+2) E, 2/(nu+2) E.
struct VirialPartition {
  double kinetic;
  double potential;
};
VirialPartition virial_partition(double nu, double energy);

/// Z <r^-2> = alpha(alpha+1) <r^-3> (hbar^2/m = e^2 a0). Mode::Exact compares
/// the engine's rationals; Mode::Float compares engine to oracle sides.
/// Throws SWaveExcluded at alpha = 0.
CheckReport schwinger_check(const QuantumState3D& state, Mode mode = Mode::Float,
                            double tol = 1e-8);

/// Circular-orbit statistics (n = 0, alpha = n_eff - 1), reduced units.
struct OrbitStats {
  double r_most = 0.0;
  double r_mean = 0.0;
  double delta_r = 0.0;
  double ratio = 0.0;
};

/// Closed forms n^2, n^2 + n/2, sqrt(n^3/2 + n^2/4), 1/sqrt(2n+1).
/// Throws NotCircular for n != 0.
OrbitStats orbit_stats(const QuantumState3D& state);
/// The same quantities recomputed: r_most from the oracle wavefunction,
/// r_mean and delta_r from engine <r> and <r^2>.
OrbitStats orbit_stats_from_moments(const QuantumState3D& state);
/// (delta_r / <r>)^2 from exact engine moments; equals 1/(2n+1) for circular states.
Rational fluctuation_ratio_squared_exact(const QuantumState3D& state);

/// r_c = <V_cf>/<T>, r_r = <p_r^2/2m>/<T>.
struct KineticRatios {
  double r_c = 0.0;
  double r_r = 0.0;
  double r_c_oracle = 0.0;
  double r_r_oracle = 0.0;
};

/// Throws NotCircular for n != 0.
KineticRatios kinetic_ratios(const QuantumState3D& state);
/// r_c = alpha(alpha+1)/((alpha+1/2) n), r_r = 1 - r_c, exactly.
std::pair<Rational, Rational> kinetic_ratios_exact(const QuantumState3D& state);

/// One row of a moment table. engine/oracle are absent when the cell is not
/// evaluated; status is "ok" or the error kind that stopped the row.
struct MomentRow {
  StateLabel state;
  int lambda = 0;
  std::optional<MomentValue> engine;
  std::optional<double> oracle;
  std::optional<double> rel_err;
  std::string status = "ok";
};

struct MomentTable {
  Mode mode = Mode::Float;
  std::vector<MomentRow> rows;
};

MomentRow moment_row(const QuantumState3D& state, int lambda, Mode mode, bool with_oracle);
MomentRow moment_row(const QuantumState2D& state, int lambda, Mode mode, bool with_oracle);

enum class Trend { Increasing, Decreasing, Constant };

struct FluxSweep {
  MomentTable table;
  std::optional<Trend> expected;  // set when the template is (0,0,0) and lambda in {-1,0,1,2}
  bool postcondition = true;      // rows follow `expected` strictly
};

/// Moments of `state_template` relabeled with each flux in `mu0_grid`.
/// For the (0,0,0) template on a grid inside [0,1) the documented trends are
/// checked: <r>, <r^2> increasing, <r^-1> decreasing, <r^0> constant.
FluxSweep flux_sweep(const QuantumState3D& state_template, std::span<const FluxParam> mu0_grid,
                     int lambda, Mode mode = Mode::Float, bool with_oracle = true);

}  // namespace abc
