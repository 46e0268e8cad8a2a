#include "abc/moment_engine.hpp"

#include "abc/errors.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace abc {

double to_double(const MomentValue& v) {
  return std::visit([](const auto& x) { return abc::to_double(x); }, v);
}

std::string to_string(const MomentValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(v));
  return std::string(buf, ptr);
}

AdmissibilityWindow AdmissibilityWindow::for_alpha(double alpha) {
  return {alpha, -(2.0 * alpha + 3.0), -(2.0 * alpha + 1.0)};
}

const ClosedFormCoefficients& ClosedFormCoefficients::standard() {
  static const ClosedFormCoefficients table{};
  return table;
}

namespace engine {

namespace {

template <class T>
std::string describe(const RadialParams<T>& p, int lambda) {
  std::ostringstream os;
  os << "lambda=" << lambda << " alpha=" << to_double(p.alpha)
     << " n_eff=" << to_double(p.n_eff);
  return os.str();
}

template <class T>
T fraction(const ClosedFormCoefficients::Fraction& f) {
  return T(f.num) / T(f.den);
}

template <class T>
void require_exists(const RadialParams<T>& p, int lambda) {
  if (!moment_exists(p, lambda))
    throw DivergentMoment("<r^lambda> diverges for lambda <= -(2 alpha + 3): " +
                          describe(p, lambda));
}

}  // namespace

template <class T>
T moment_value(const RadialParams<T>& p, int lambda) {
  require_exists(p, lambda);
  if (lambda == 0) return T(1);

  const T n2 = p.n_eff * p.n_eff;
  const T two_alpha_plus_one = 2 * p.alpha + 1;
  const T s2 = two_alpha_plus_one * two_alpha_plus_one;
  const T m_minus1 = 1 / n2;
  if (lambda == -1) return m_minus1;

  if (lambda > 0) {
    T older = m_minus1;  // <r^{l-2}>
    T old = T(1);        // <r^{l-1}>
    for (int l = 1; l <= lambda; ++l) {
      const T lt(l);
      const T next = n2 / (lt + 1) * ((2 * lt + 1) * old - lt / 4 * (s2 - lt * lt) * older);
      older = old;
      old = next;
    }
    return old;
  }

  // Hellmann-Feynman seed.
  const T m_minus2 = 1 / (n2 * p.n_eff * (p.alpha + T(1) / 2));
  if (lambda == -2) return m_minus2;

  // Downward: the relation at power mu fixes <r^{mu-2}> from <r^{mu-1}>, <r^mu>.
  T upper = m_minus1;  // <r^mu>
  T mid = m_minus2;    // <r^{mu-1}>
  for (int mu = -1; mu >= lambda + 2; --mu) {
    if (!recurrence_valid(p, mu))
      throw RecurrenceWindow("downward step outside lambda > -(2 alpha + 1): " + describe(p, mu));
    const T mt(mu);
    const T coeff = mt / 4 * (s2 - mt * mt);
    if (coeff == 0)
      throw RecurrenceWindow("degenerate recurrence coefficient: " + describe(p, mu));
    const T lower = ((2 * mt + 1) * mid - (mt + 1) / n2 * upper) / coeff;
    upper = mid;
    mid = lower;
  }
  return mid;
}

template <class T>
T closed_form_value(const RadialParams<T>& p, int lambda, const ClosedFormCoefficients& cf) {
  require_exists(p, lambda);
  const T& a = p.alpha;
  const T& n = p.n_eff;
  const T n2 = n * n;
  const T n3 = n2 * n;
  const T aa1 = a * (a + 1);
  const T half(T(1) / 2);
  const auto& c = cf.c;
  switch (lambda) {
    case 0:
      return T(1);
    case 1:
      return fraction<T>(c[0]) * (fraction<T>(c[1]) * n2 - fraction<T>(c[2]) * aa1);
    case 2:
      return fraction<T>(c[3]) * n2 *
             (fraction<T>(c[4]) + fraction<T>(c[5]) * n2 - fraction<T>(c[6]) * aa1);
    case -1:
      return 1 / n2;
    case -2:
      return 1 / (n3 * (a + half));
    case -3:
      return 1 / (n3 * a * (a + half) * (a + 1));
    case -4:
      return (3 * n2 - aa1) /
             (2 * n3 * n2 * a * (a - half) * (a + half) * (a + 1) * (a + 3 * half));
    default:
      throw std::invalid_argument("closed forms exist for lambda in {-4..2}, got " +
                                  std::to_string(lambda));
  }
}

template double moment_value<double>(const RadialParams<double>&, int);
template Rational moment_value<Rational>(const RadialParams<Rational>&, int);
template double closed_form_value<double>(const RadialParams<double>&, int,
                                          const ClosedFormCoefficients&);
template Rational closed_form_value<Rational>(const RadialParams<Rational>&, int,
                                              const ClosedFormCoefficients&);

}  // namespace engine

namespace {

template <class State>
Moment evaluate(const State& state, int lambda, Mode mode) {
  if (mode == Mode::Exact)
    return {lambda, engine::moment_value(state.radial_exact(), lambda), mode};
  return {lambda, engine::moment_value(state.radial(), lambda), mode};
}

template <class State>
Moment evaluate_closed(const State& state, int lambda, Mode mode,
                       const ClosedFormCoefficients& coeffs) {
  if (mode == Mode::Exact)
    return {lambda, engine::closed_form_value(state.radial_exact(), lambda, coeffs), mode};
  return {lambda, engine::closed_form_value(state.radial(), lambda, coeffs), mode};
}

}  // namespace

Moment moment(const QuantumState3D& state, int lambda, Mode mode) {
  return evaluate(state, lambda, mode);
}

Moment moment_2d(const QuantumState2D& state, int lambda, Mode mode) {
  return evaluate(state, lambda, mode);
}

Moment closed_form_moment(const QuantumState3D& state, int lambda, Mode mode,
                          const ClosedFormCoefficients& coeffs) {
  return evaluate_closed(state, lambda, mode, coeffs);
}

Moment closed_form_moment_2d(const QuantumState2D& state, int lambda, Mode mode,
                             const ClosedFormCoefficients& coeffs) {
  return evaluate_closed(state, lambda, mode, coeffs);
}

namespace {

template <class T>
T planar_value(const T& at, const T& n2, int lambda) {
  if (!(T(lambda) > -(2 * at + 2)))
    throw DivergentMoment("<rho^lambda> diverges for lambda <= -(2 alpha_tilde + 2)");
  const T half(T(1) / 2);
  switch (lambda) {
    case -1: return 1 / (n2 * n2);
    case -2: return 1 / (n2 * n2 * n2 * at);
    case -3: return 1 / (n2 * n2 * n2 * at * (at - half) * (at + half));
    default:
      throw std::invalid_argument("planar closed forms exist for lambda in {-3,-2,-1}");
  }
}

}  // namespace

Moment planar_closed_form(const QuantumState2D& state, int lambda, Mode mode) {
  if (mode == Mode::Exact)
    return {lambda, planar_value(state.alpha_tilde_exact(), state.n_eff2_exact(), lambda), mode};
  return {lambda, planar_value(state.alpha_tilde(), state.n_eff2(), lambda), mode};
}

double recurrence_residual(const QuantumState3D& state, int lambda, const Moment& m2,
                           const Moment& m1, const Moment& m0) {
  return recurrence_residual(state.radial(), lambda, m2.to_double(), m1.to_double(),
                             m0.to_double());
}

Rational recurrence_residual_exact(const QuantumState3D& state, int lambda, const Moment& m2,
                                   const Moment& m1, const Moment& m0) {
  return recurrence_residual(state.radial_exact(), lambda, m2.exact(), m1.exact(), m0.exact());
}

}  // namespace abc
