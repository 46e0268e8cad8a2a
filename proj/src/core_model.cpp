#include "abc/core_model.hpp"

#include "abc/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace abc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivergentMoment: return "DivergentMoment";
    case ErrorKind::RecurrenceWindow: return "RecurrenceWindow";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::SWaveExcluded: return "SWaveExcluded";
    case ErrorKind::NotCircular: return "NotCircular";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- rationals

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::optional<Rational> parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  s.remove_prefix(std::min(s.find_first_not_of('0'), s.size() - 1));
  const boost::multiprecision::cpp_int v{std::string(s)};
  return Rational(negative ? -v : v);
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return *num / *den;
  }

  // decimal: [sign] digits [. digits] [e [sign] digits]
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    auto exp_text = text.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size()) return std::nullopt;
    if (std::abs(exponent) > 400) return std::nullopt;
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    auto int_part = mantissa.substr(0, dot);
    auto frac_part = mantissa.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      return std::nullopt;
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) return std::nullopt;
    digits = std::string(mantissa);
  }
  if (digits.empty()) return std::nullopt;
  // cpp_int reads a leading 0 as an octal prefix
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));

  boost::multiprecision::cpp_int value(digits);
  boost::multiprecision::cpp_int scale = boost::multiprecision::pow(
      boost::multiprecision::cpp_int(10), static_cast<unsigned>(std::abs(exponent)));
  Rational r = exponent >= 0 ? Rational(value * scale) : Rational(value, scale);
  return negative ? Rational(-r) : r;
}

bool is_binary_fraction(const Rational& x) {
  auto den = boost::multiprecision::denominator(x);
  return (den & (den - 1)) == 0;
}

std::string to_string(const Rational& x) {
  auto num = boost::multiprecision::numerator(x);
  auto den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// ---------------------------------------------------------------- flux

double flux_to_mu0(double flux_quanta) {
  if (!std::isfinite(flux_quanta)) throw std::domain_error("flux_to_mu0: non-finite flux");
  return -flux_quanta;
}

FluxParam FluxParam::from_mu0(double mu0) {
  if (!std::isfinite(mu0)) throw std::domain_error("FluxParam: mu0 must be finite");
  return FluxParam(mu0, std::nullopt);
}

FluxParam FluxParam::from_flux_quanta(double flux_quanta) {
  return from_mu0(flux_to_mu0(flux_quanta));
}

FluxParam FluxParam::exact(const Rational& mu0) {
  return FluxParam(to_double(mu0), mu0);
}

FluxParam FluxParam::shifted(int m) const {
  if (exact_) return exact(*exact_ + m);
  return from_mu0(mu0_ + m);
}

std::string FluxParam::to_string() const {
  if (exact_) return abc::to_string(*exact_);
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, mu0_);
  return std::string(buf, ptr);
}

// ---------------------------------------------------------------- states

namespace {

const Rational& require_exact(const FluxParam& flux) {
  if (!flux.exact_mu0())
    throw NotRational("exact arithmetic needs mu0 as an exact rational, got " + flux.to_string());
  return *flux.exact_mu0();
}

Rational abs_exact(const Rational& x) { return x < 0 ? Rational(-x) : x; }

void validate_charge(double Z) {
  if (!(Z > 0.0) || !std::isfinite(Z)) throw std::invalid_argument("Z must be finite and > 0");
}

}  // namespace

QuantumState3D::QuantumState3D(int n, int q, int k, FluxParam flux, double Z)
    : n_(n), q_(q), k_(k), flux_(std::move(flux)), Z_(Z) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (q < 0) throw std::invalid_argument("q must be >= 0");
  validate_charge(Z);
}

double QuantumState3D::alpha() const noexcept { return q_ + std::abs(k_ + flux_.mu0()); }
// Integer part first so that states with equal n + q + 1 and |k + mu0| give
// bit-identical n_eff.
double QuantumState3D::n_eff() const noexcept {
  return static_cast<double>(n_ + q_ + 1) + std::abs(k_ + flux_.mu0());
}

Rational QuantumState3D::alpha_exact() const {
  return Rational(q_) + abs_exact(Rational(k_) + require_exact(flux_));
}
Rational QuantumState3D::n_eff_exact() const { return Rational(n_ + 1) + alpha_exact(); }

RadialParams<double> QuantumState3D::radial() const noexcept {
  return {alpha(), n_eff(), n_};
}
RadialParams<Rational> QuantumState3D::radial_exact() const {
  return {alpha_exact(), n_eff_exact(), n_};
}

QuantumState3D QuantumState3D::gauge_shifted(int m) const {
  return QuantumState3D(n_, q_, k_ + m, flux_.shifted(-m), Z_);
}

QuantumState2D::QuantumState2D(int n, int k, FluxParam flux, double Z)
    : n_(n), k_(k), flux_(std::move(flux)), Z_(Z) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  validate_charge(Z);
}

double QuantumState2D::alpha_tilde() const noexcept { return std::abs(k_ + flux_.mu0()); }
double QuantumState2D::n_eff2() const noexcept { return (n_ + 0.5) + alpha_tilde(); }

Rational QuantumState2D::alpha_tilde_exact() const {
  return abs_exact(Rational(k_) + require_exact(flux_));
}
Rational QuantumState2D::n_eff2_exact() const {
  return Rational(n_) + alpha_tilde_exact() + Rational(1, 2);
}

RadialParams<double> QuantumState2D::radial() const noexcept {
  return {alpha_tilde() - 0.5, n_eff2(), n_};
}
RadialParams<Rational> QuantumState2D::radial_exact() const {
  return {alpha_tilde_exact() - Rational(1, 2), n_eff2_exact(), n_};
}

QuantumState2D QuantumState2D::gauge_shifted(int m) const {
  return QuantumState2D(n_, k_ + m, flux_.shifted(-m), Z_);
}

// ---------------------------------------------------------------- spectra

double effective_alpha(const QuantumState3D& state) { return state.alpha(); }

Rational exact_charge(double Z) { return Rational(Z); }

double energy_3d(const QuantumState3D& state) {
  const double n = state.n_eff();
  return -state.Z() * state.Z() / (2.0 * n * n);
}

Rational energy_3d_exact(const QuantumState3D& state) {
  const Rational n = state.n_eff_exact();
  const Rational Z = exact_charge(state.Z());
  return -Z * Z / (2 * n * n);
}

double energy_2d(const QuantumState2D& state) {
  const double n = state.n_eff2();
  return -state.Z() * state.Z() / (2.0 * n * n);
}

Rational energy_2d_exact(const QuantumState2D& state) {
  const Rational n = state.n_eff2_exact();
  const Rational Z = exact_charge(state.Z());
  return -Z * Z / (2 * n * n);
}

}  // namespace abc
