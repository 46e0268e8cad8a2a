#pragma once

// Quantum-number bookkeeping for the Aharonov-Bohm-Coulomb bound states.
//
// Units: lengths in a0/Z, energies in e^2/a0, and hbar^2/m = e^2 a0 wherever
// hbar^2/m appears. Every quantity below is therefore a pure number.

#include "abc/rational.hpp"

#include <optional>
#include <string>

namespace abc {

/// Flux in units of the single-charge flux quantum hc/e mapped to mu0.
/// mu0 = -2eg/(hbar c) with Phi = 4 pi g, which is -Phi/(hc/e).
double flux_to_mu0(double flux_quanta);

/// Dimensionless flux factor mu0. Optionally carries an exact rational value,
/// which is what Mode::Exact computations read.
class FluxParam {
 public:
  FluxParam() : mu0_(0.0), exact_(Rational(0)) {}

  static FluxParam from_mu0(double mu0);
  static FluxParam from_flux_quanta(double flux_quanta);
  static FluxParam exact(const Rational& mu0);

  double mu0() const noexcept { return mu0_; }
  const std::optional<Rational>& exact_mu0() const noexcept { return exact_; }

  /// mu0 + m, keeping exactness. Used for the k -> k - m relabeling.
  FluxParam shifted(int m) const;

  /// Decimal or p/q, whichever the value was constructed from.
  std::string to_string() const;

 private:
  FluxParam(double mu0, std::optional<Rational> exact)
      : mu0_(mu0), exact_(std::move(exact)) {}

  double mu0_;
  std::optional<Rational> exact_;
};

/// Effective radial problem: u'' + [2/r - alpha(alpha+1)/r^2 - 1/n_eff^2] u = 0
/// in reduced units. Both 3D and 2D states map onto it.
template <class T>
struct RadialParams {
  T alpha;
  T n_eff;
  int n = 0;  // radial quantum number, the Laguerre degree
};

class QuantumState3D {
 public:
  /// Throws std::invalid_argument for n < 0, q < 0 or Z <= 0.
  QuantumState3D(int n, int q, int k, FluxParam flux = {}, double Z = 1.0);

  int n() const noexcept { return n_; }
  int q() const noexcept { return q_; }
  int k() const noexcept { return k_; }
  const FluxParam& flux() const noexcept { return flux_; }
  double Z() const noexcept { return Z_; }

  /// q + |k + mu0|
  double alpha() const noexcept;
  /// n + q + |k + mu0| + 1
  double n_eff() const noexcept;

  Rational alpha_exact() const;  // throws NotRational
  Rational n_eff_exact() const;  // throws NotRational

  RadialParams<double> radial() const noexcept;
  RadialParams<Rational> radial_exact() const;

  /// Same physical state labeled (k + m, mu0 - m).
  QuantumState3D gauge_shifted(int m) const;

 private:
  int n_, q_, k_;
  FluxParam flux_;
  double Z_;
};

class QuantumState2D {
 public:
  QuantumState2D(int n, int k, FluxParam flux = {}, double Z = 1.0);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const FluxParam& flux() const noexcept { return flux_; }
  double Z() const noexcept { return Z_; }

  /// |k + mu0|
  double alpha_tilde() const noexcept;
  /// n + |k + mu0| + 1/2
  double n_eff2() const noexcept;

  Rational alpha_tilde_exact() const;
  Rational n_eff2_exact() const;

  /// The 3D problem with alpha -> alpha_tilde - 1/2 and n_eff -> n_eff2.
  RadialParams<double> radial() const noexcept;
  RadialParams<Rational> radial_exact() const;

  QuantumState2D gauge_shifted(int m) const;

 private:
  int n_, k_;
  FluxParam flux_;
  double Z_;
};

double effective_alpha(const QuantumState3D& state);

/// -Z^2 / (2 n_eff^2) in e^2/a0.
double energy_3d(const QuantumState3D& state);
Rational energy_3d_exact(const QuantumState3D& state);

/// -Z^2 / (2 n_eff2^2) in e^2/a0.
double energy_2d(const QuantumState2D& state);
Rational energy_2d_exact(const QuantumState2D& state);

/// Z as an exact rational (every finite double is one).
Rational exact_charge(double Z);

}  // namespace abc
