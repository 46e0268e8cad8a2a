#pragma once

// Ground truth that never touches the recurrence: explicit normalized
// eigenfunctions and their integrals.
//
//   3D: u(r)   = N r^{alpha+1}     e^{-s r/2} L_n^{(2 alpha+1)}(s r)
//   2D: chi(p) = N p^{at+1/2}      e^{-s p/2} L_n^{(2 at)}(s p),  at = |k+mu0|
//
// with s = 2Z/n_eff (a0 = 1). Internally everything is in Bohr units with the
// physical Z; results are handed back in the reduced units (a0/Z)^lambda the
// engine uses.

#include "abc/core_model.hpp"
#include "abc/specfun.hpp"

#include <cmath>

namespace abc {

class RadialWavefunction {
 public:
  explicit RadialWavefunction(const QuantumState3D& state);
  explicit RadialWavefunction(const QuantumState2D& state);

  double operator()(double r) const;
  double derivative(double r) const;
  double second_derivative(double r) const;

  /// u'' + [2Z/r - alpha(alpha+1)/r^2 - (Z/n_eff)^2] u at r.
  double ode_residual(double r) const;

  /// r where u^2 peaks, by bisection on u'(r) = 0. Only meaningful for n = 0.
  double most_probable_radius() const;

  int dimension() const noexcept { return dim_; }
  int n() const noexcept { return n_; }
  double alpha() const noexcept { return alpha_; }
  double n_eff() const noexcept { return n_eff_; }
  double Z() const noexcept { return Z_; }
  double scale() const noexcept { return s_; }
  double norm_constant() const noexcept { return std::exp(log_norm_); }
  double log_norm_constant() const noexcept { return log_norm_; }
  const specfun::LaguerreBasis& basis() const noexcept { return basis_; }

 private:
  RadialWavefunction(int dim, int n, double alpha, double n_eff, double Z);

  // r^{alpha+1} e^{-s r/2} times N
  double envelope(double r) const;

  int dim_;
  int n_;
  double alpha_;
  double n_eff_;
  double Z_;
  double s_;
  double log_norm_;
  specfun::LaguerreBasis basis_;
};

inline RadialWavefunction build_wavefunction(const QuantumState3D& s) {
  return RadialWavefunction(s);
}
inline RadialWavefunction build_wavefunction(const QuantumState2D& s) {
  return RadialWavefunction(s);
}

/// Both oracle evaluations of one moment, reduced units.
struct OracleEvaluation {
  double series = 0.0;      // Gamma-series path
  double quadrature = 0.0;  // Gauss-Laguerre path
  double rel_diff() const;
  double value() const { return series; }
};

/// Throws DivergentMoment if lambda <= -(2 alpha + 3).
OracleEvaluation oracle_moment_paths(const RadialWavefunction& wf, double lambda);

/// Tolerance between the two paths; beyond it oracle_moment throws.
inline constexpr double kOraclePathTolerance = 1e-10;

/// <r^lambda> in (a0/Z)^lambda; real lambda allowed. Throws DivergentMoment,
/// or OracleMismatch when the two internal paths disagree.
double oracle_moment(const QuantumState3D& state, double lambda);
double oracle_moment_2d(const QuantumState2D& state, double lambda);
double oracle_moment(const RadialWavefunction& wf, double lambda);

/// int_0^inf r^lambda (du/dr)^2 dr from the analytic derivative, in units
/// (a0/Z)^{lambda-2}. Throws RecurrenceWindow for lambda <= -(2 alpha + 1).
double kinetic_weighted_integral(const RadialWavefunction& wf, int lambda);
double kinetic_weighted_integral(const QuantumState3D& state, int lambda);

/// int u_a u_b dr for two wavefunctions sharing alpha (same quadrature weight).
double overlap(const RadialWavefunction& a, const RadialWavefunction& b);

}  // namespace abc
