#pragma once

// Radial moments <r^lambda> from the three-term recurrence
//
//   (lambda+1)/n^2 <r^lambda> - (2 lambda + 1) <r^{lambda-1}>
//       + (lambda/4) [(2 alpha + 1)^2 - lambda^2] <r^{lambda-2}> = 0
//
// (reduced units, lengths in a0/Z). Seeds: <r^0> = 1, <r^-1> = 1/n^2 and the
// Hellmann-Feynman value <r^-2> = 1 / (n^3 (alpha + 1/2)). The recurrence
// runs upward for lambda >= 1 and downward for lambda <= -3.

#include "abc/core_model.hpp"
#include "abc/rational.hpp"

#include <array>
#include <variant>

namespace abc {

enum class Mode { Float, Exact };

using MomentValue = std::variant<double, Rational>;

double to_double(const MomentValue& v);
std::string to_string(const MomentValue& v);

/// <r^lambda> in units (a0/Z)^lambda.
struct Moment {
  int lambda = 0;
  MomentValue value = 1.0;
  Mode mode = Mode::Float;

  double to_double() const { return abc::to_double(value); }
  const Rational& exact() const { return std::get<Rational>(value); }
};

/// Moments exist iff lambda > -(2 alpha + 3); the recurrence boundary terms
/// vanish iff lambda > -(2 alpha + 1).
struct AdmissibilityWindow {
  double alpha = 0.0;
  double finite_bound = -3.0;
  double recurrence_bound = -1.0;

  static AdmissibilityWindow for_alpha(double alpha);

  bool finite(double lambda) const noexcept { return lambda > finite_bound; }
  bool recurrence_valid(double lambda) const noexcept {
    return lambda > recurrence_bound;
  }
};

/// Coefficients of the lambda = 1, 2 closed forms
///   <r>   = a0 [a1 n^2 - a2 alpha(alpha+1)]
///   <r^2> = b0 n^2 [b1 + b2 n^2 - b3 alpha(alpha+1)]
/// kept as data so a corrupted coefficient can be injected under test.
struct ClosedFormCoefficients {
  struct Fraction {
    long num;
    long den;
  };
  // a0, a1, a2, b0, b1, b2, b3
  std::array<Fraction, 7> c{{{1, 2}, {3, 1}, {1, 1}, {1, 2}, {1, 1}, {5, 1}, {3, 1}}};

  static const ClosedFormCoefficients& standard();
};

Moment moment(const QuantumState3D& state, int lambda, Mode mode = Mode::Float);

/// <rho^lambda> for the 2D system via alpha -> alpha_tilde - 1/2, n -> n_eff2.
Moment moment_2d(const QuantumState2D& state, int lambda, Mode mode = Mode::Float);

/// Direct evaluation of the closed forms for lambda in {-4,-3,-2,-1,1,2}
/// (and lambda = 0). The lambda = -4 form is
///   [3n^2 - alpha(alpha+1)] / [2 n^5 alpha (alpha-1/2)(alpha+1/2)(alpha+1)(alpha+3/2)].
/// Throws std::invalid_argument for other lambda.
Moment closed_form_moment(const QuantumState3D& state, int lambda, Mode mode = Mode::Float,
                          const ClosedFormCoefficients& coeffs = ClosedFormCoefficients::standard());
Moment closed_form_moment_2d(const QuantumState2D& state, int lambda, Mode mode = Mode::Float,
                             const ClosedFormCoefficients& coeffs = ClosedFormCoefficients::standard());

/// The 2D closed forms written directly in alpha_tilde = |k + mu0|:
///   <1/rho> = 1/n2^2, <1/rho^2> = 1/(n2^3 at), <1/rho^3> = 1/(n2^3 at (at-1/2)(at+1/2)).
/// lambda in {-3,-2,-1}; independent of the alpha -> alpha_tilde - 1/2 mapping.
Moment planar_closed_form(const QuantumState2D& state, int lambda, Mode mode = Mode::Float);

/// (lambda+1)/n^2 m0 - (2 lambda + 1) m1 + (lambda/4)[(2 alpha+1)^2 - lambda^2] m2
/// with m0 = <r^lambda>, m1 = <r^{lambda-1}>, m2 = <r^{lambda-2}>.
template <class T>
T recurrence_residual(const RadialParams<T>& p, int lambda, const T& m2, const T& m1,
                      const T& m0) {
  const T l(lambda);
  const T two_alpha_plus_one = 2 * p.alpha + 1;
  return (l + 1) / (p.n_eff * p.n_eff) * m0 - (2 * l + 1) * m1 +
         l / 4 * (two_alpha_plus_one * two_alpha_plus_one - l * l) * m2;
}

double recurrence_residual(const QuantumState3D& state, int lambda, const Moment& m2,
                           const Moment& m1, const Moment& m0);
Rational recurrence_residual_exact(const QuantumState3D& state, int lambda,
                                   const Moment& m2, const Moment& m1, const Moment& m0);

namespace engine {

/// Raw recurrence over an effective radial problem; the public overloads
/// above forward here. Throws DivergentMoment / RecurrenceWindow.
template <class T>
T moment_value(const RadialParams<T>& p, int lambda);

template <class T>
T closed_form_value(const RadialParams<T>& p, int lambda,
                    const ClosedFormCoefficients& coeffs);

/// lambda > -(2 alpha + 3), evaluated exactly in T.
template <class T>
bool moment_exists(const RadialParams<T>& p, int lambda) {
  return T(lambda) > -(2 * p.alpha + 3);
}

template <class T>
bool recurrence_valid(const RadialParams<T>& p, int lambda) {
  return T(lambda) > -(2 * p.alpha + 1);
}

extern template double moment_value<double>(const RadialParams<double>&, int);
extern template Rational moment_value<Rational>(const RadialParams<Rational>&, int);
extern template double closed_form_value<double>(const RadialParams<double>&, int,
                                                 const ClosedFormCoefficients&);
extern template Rational closed_form_value<Rational>(const RadialParams<Rational>&, int,
                                                     const ClosedFormCoefficients&);

}  // namespace engine

}  // namespace abc
