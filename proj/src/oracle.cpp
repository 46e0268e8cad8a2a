#include "abc/oracle.hpp"

#include "abc/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace abc {

namespace {

using specfun::gauss_laguerre;
using specfun::laguerre_eval;
using specfun::LaguerreBasis;

// sum_{i,j} c_i c_j (b)_{i+j}; the Gamma-series integral of t^{b-1} e^{-t} L^2
// is Gamma(b) times this.
long double pochhammer_series(const LaguerreBasis& basis, double b) {
  const auto c = basis.coefficients();
  const int n = basis.degree();
  long double total = 0.0L;
  long double poch = 1.0L;  // (b)_m
  for (int m = 0; m <= 2 * n; ++m) {
    long double conv = 0.0L;
    for (int i = std::max(0, m - n); i <= std::min(m, n); ++i)
      conv += static_cast<long double>(c[i]) * c[m - i];
    total += conv * poch;
    poch *= static_cast<long double>(b) + m;
  }
  return total;
}

std::string describe(const RadialWavefunction& wf, double lambda) {
  std::ostringstream os;
  os << "lambda=" << lambda << " alpha=" << wf.alpha() << " n=" << wf.n();
  return os.str();
}

// Quadrature integral of t^{2 alpha + 2} e^{-t} L(t)^2.
double quadrature_norm(int n, double alpha) {
  const auto rule = gauss_laguerre(2.0 * alpha + 2.0, specfun::default_node_count(n, 0.0));
  const double a = 2.0 * alpha + 1.0;
  return rule.integrate([&](double t) {
    const double l = laguerre_eval(n, a, t);
    return l * l;
  });
}

}  // namespace

RadialWavefunction::RadialWavefunction(int dim, int n, double alpha, double n_eff, double Z)
    : dim_(dim),
      n_(n),
      alpha_(alpha),
      n_eff_(n_eff),
      Z_(Z),
      s_(2.0 * Z / n_eff),
      log_norm_(0.0),
      basis_(n, 2.0 * alpha + 1.0) {
  // N^2 s^{-(2 alpha + 3)} Gamma(2 alpha + 3) S(2 alpha + 3) = 1
  const double b0 = 2.0 * alpha + 3.0;
  const double log_integral =
      specfun::log_gamma(b0) + std::log(static_cast<double>(pochhammer_series(basis_, b0)));
  log_norm_ = 0.5 * (b0 * std::log(s_) - log_integral);
}

RadialWavefunction::RadialWavefunction(const QuantumState3D& state)
    : RadialWavefunction(3, state.n(), state.alpha(), state.n_eff(), state.Z()) {}

RadialWavefunction::RadialWavefunction(const QuantumState2D& state)
    : RadialWavefunction(2, state.n(), state.alpha_tilde() - 0.5, state.n_eff2(), state.Z()) {}

double RadialWavefunction::envelope(double r) const {
  return std::exp(log_norm_ + (alpha_ + 1.0) * std::log(r) - 0.5 * s_ * r);
}

double RadialWavefunction::operator()(double r) const {
  if (r <= 0.0) return 0.0;
  return envelope(r) * laguerre_eval(n_, 2.0 * alpha_ + 1.0, s_ * r);
}

double RadialWavefunction::derivative(double r) const {
  if (r <= 0.0) throw std::domain_error("RadialWavefunction::derivative needs r > 0");
  const double a = 2.0 * alpha_ + 1.0;
  const double t = s_ * r;
  const double p = alpha_ + 1.0;
  return envelope(r) * ((p / r - 0.5 * s_) * laguerre_eval(n_, a, t) +
                        s_ * specfun::laguerre_derivative(n_, a, t));
}

double RadialWavefunction::second_derivative(double r) const {
  if (r <= 0.0) throw std::domain_error("RadialWavefunction::second_derivative needs r > 0");
  const double a = 2.0 * alpha_ + 1.0;
  const double t = s_ * r;
  const double p = alpha_ + 1.0;
  const double g = p / r - 0.5 * s_;  // phi'/phi
  const double l0 = laguerre_eval(n_, a, t);
  const double l1 = specfun::laguerre_derivative(n_, a, t);
  const double l2 = n_ >= 2 ? laguerre_eval(n_ - 2, a + 2.0, t) : 0.0;
  return envelope(r) * ((g * g - p / (r * r)) * l0 + 2.0 * s_ * g * l1 + s_ * s_ * l2);
}

double RadialWavefunction::ode_residual(double r) const {
  const double k = Z_ / n_eff_;
  return second_derivative(r) +
         (2.0 * Z_ / r - alpha_ * (alpha_ + 1.0) / (r * r) - k * k) * (*this)(r);
}

double RadialWavefunction::most_probable_radius() const {
  // Sign of u'/envelope, free of under/overflow.
  const double a = 2.0 * alpha_ + 1.0;
  const double p = alpha_ + 1.0;
  auto slope = [&](double r) {
    const double t = s_ * r;
    return (p / r - 0.5 * s_) * laguerre_eval(n_, a, t) +
           s_ * specfun::laguerre_derivative(n_, a, t);
  };
  // Scan for stationary points on a geometric grid, keep the tallest.
  const double r_lo = 1e-6 / s_;
  const double r_hi = (8.0 * (n_ + p) + 40.0) / s_;
  const int steps = 4000;
  const double ratio = std::pow(r_hi / r_lo, 1.0 / steps);
  double best_r = 0.0, best_u = -1.0;
  double r0 = r_lo, f0 = slope(r0);
  for (int i = 1; i <= steps; ++i) {
    const double r1 = r0 * ratio;
    const double f1 = slope(r1);
    if (f0 > 0.0 && f1 <= 0.0) {
      double lo = r0, hi = r1;
      for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (slope(mid) > 0.0 ? lo : hi) = mid;
      }
      const double r = 0.5 * (lo + hi);
      const double u = std::abs((*this)(r));
      if (u > best_u) {
        best_u = u;
        best_r = r;
      }
    }
    r0 = r1;
    f0 = f1;
  }
  return best_r;
}

double OracleEvaluation::rel_diff() const {
  return std::abs(series - quadrature) / std::abs(series);
}

OracleEvaluation oracle_moment_paths(const RadialWavefunction& wf, double lambda) {
  const double alpha = wf.alpha();
  const double b0 = 2.0 * alpha + 3.0;
  const double b = b0 + lambda;
  if (!(b > 0.0))
    throw DivergentMoment("oracle: <r^lambda> diverges for lambda <= -(2 alpha + 3): " +
                          describe(wf, lambda));
  const double s = wf.scale();
  const double to_reduced = std::pow(wf.Z(), lambda);
  const double length_scale = std::pow(s, -lambda);

  OracleEvaluation out;

  // Gamma-series path
  const long double ratio =
      pochhammer_series(wf.basis(), b) / pochhammer_series(wf.basis(), b0);
  out.series = length_scale *
               std::exp(specfun::log_gamma(b) - specfun::log_gamma(b0)) *
               static_cast<double>(ratio) * to_reduced;

  // Quadrature path
  const int n = wf.n();
  const double a = 2.0 * alpha + 1.0;
  const auto rule = gauss_laguerre(b - 1.0, specfun::default_node_count(n, lambda));
  const double integral = rule.integrate([&](double t) {
    const double l = laguerre_eval(n, a, t);
    return l * l;
  });
  out.quadrature = length_scale * integral / quadrature_norm(n, alpha) * to_reduced;
  return out;
}

double oracle_moment(const RadialWavefunction& wf, double lambda) {
  const auto eval = oracle_moment_paths(wf, lambda);
  if (!(eval.rel_diff() <= kOraclePathTolerance)) {
    std::ostringstream os;
    os << "oracle paths disagree: series=" << eval.series << " quadrature=" << eval.quadrature
       << " (" << describe(wf, lambda) << ")";
    throw OracleMismatch(os.str());
  }
  return eval.value();
}

double oracle_moment(const QuantumState3D& state, double lambda) {
  return oracle_moment(RadialWavefunction(state), lambda);
}

double oracle_moment_2d(const QuantumState2D& state, double lambda) {
  return oracle_moment(RadialWavefunction(state), lambda);
}

double kinetic_weighted_integral(const RadialWavefunction& wf, int lambda) {
  const double alpha = wf.alpha();
  if (!(lambda > -(2.0 * alpha + 1.0)))
    throw RecurrenceWindow("kinetic integral needs lambda > -(2 alpha + 1): " +
                           describe(wf, lambda));
  // u' = N s^{1-p} t^{p-1} e^{-t/2} B(t), B = (p - t/2) L + t L', t = s r
  const int n = wf.n();
  const double a = 2.0 * alpha + 1.0;
  const double p = alpha + 1.0;
  const auto rule = gauss_laguerre(lambda + 2.0 * alpha, specfun::default_node_count(n + 1, lambda));
  const double integral = rule.integrate([&](double t) {
    const double bt = (p - 0.5 * t) * laguerre_eval(n, a, t) +
                      t * specfun::laguerre_derivative(n, a, t);
    return bt * bt;
  });
  const double physical = std::pow(wf.scale(), 2.0 - lambda) * integral / quadrature_norm(n, alpha);
  return physical * std::pow(wf.Z(), lambda - 2.0);
}

double kinetic_weighted_integral(const QuantumState3D& state, int lambda) {
  return kinetic_weighted_integral(RadialWavefunction(state), lambda);
}

double overlap(const RadialWavefunction& a, const RadialWavefunction& b) {
  if (a.alpha() != b.alpha())
    throw std::invalid_argument("overlap: wavefunctions must share alpha");
  const double alpha = a.alpha();
  const double sigma = 0.5 * (a.scale() + b.scale());
  const double param = 2.0 * alpha + 1.0;
  const auto rule = gauss_laguerre(2.0 * alpha + 2.0,
                                   specfun::default_node_count(a.n() + b.n(), 0.0));
  const double ra = a.scale() / sigma, rb = b.scale() / sigma;
  const double integral = rule.integrate([&](double t) {
    return laguerre_eval(a.n(), param, ra * t) * laguerre_eval(b.n(), param, rb * t);
  });
  const double log_prefactor = a.log_norm_constant() + b.log_norm_constant() -
                               (2.0 * alpha + 3.0) * std::log(sigma);
  return std::exp(log_prefactor) * integral;
}

}  // namespace abc
