#include "abc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace abc::specfun {

// Implicit QL with Wilkinson shifts, eigenvalues only.
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> offdiag) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) return {};
  if (static_cast<int>(offdiag.size()) != n - 1)
    throw std::invalid_argument("tridiagonal_eigenvalues: offdiag must have size n-1");

  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(n, 0.0);
  std::copy(offdiag.begin(), offdiag.end(), e.begin());
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) throw std::runtime_error("tridiagonal_eigenvalues: no convergence");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool deflated = false;
      for (int i = m - 1; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

// L_N and L_{N-1} at x, both divided by exp(log_scale) to stay finite.
struct ScaledPair {
  double value;     // L_N
  double previous;  // L_{N-1}
  double log_scale;
};

ScaledPair laguerre_pair(int N, double beta, double x) {
  constexpr double big = 1e150;
  double prev = 1.0;
  double cur = 1.0 + beta - x;
  double log_scale = 0.0;
  if (N == 1) return {cur, prev, 0.0};
  for (int k = 1; k < N; ++k) {
    const double next = ((2 * k + 1 + beta - x) * cur - (k + beta) * prev) / (k + 1);
    prev = cur;
    cur = next;
    if (std::abs(cur) > big) {
      cur /= big;
      prev /= big;
      log_scale += std::log(big);
    }
  }
  return {cur, prev, log_scale};
}

// Newton step L_N / L_N' using L_N' = (N L_N - (N+beta) L_{N-1}) / x.
double newton_step(int N, double beta, double x) {
  const auto p = laguerre_pair(N, beta, x);
  const double derivative = (N * p.value - (N + beta) * p.previous) / x;
  return p.value / derivative;
}

double polish_root(int N, double beta, double guess, double lo, double hi) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double x = guess;
  for (int it = 0; it < 30; ++it) {
    const double dx = newton_step(N, beta, x);
    const double next = x - dx;
    if (!(next > lo && next < hi) || !std::isfinite(next)) break;
    if (std::abs(dx) <= 4.0 * eps * std::abs(next)) return next;
    x = next;
  }
  // Bisection fallback on the bracket, which holds exactly one root.
  double f_lo = laguerre_pair(N, beta, lo).value;
  for (int it = 0; it < 200 && hi - lo > 2.0 * eps * std::abs(hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = laguerre_pair(N, beta, mid).value;
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

QuadratureRule gauss_laguerre(double beta, int N) {
  if (N <= 0) throw std::domain_error("gauss_laguerre: N must be >= 1");
  if (!(beta > -1.0) || !std::isfinite(beta))
    throw std::domain_error("gauss_laguerre: beta must be > -1");

  std::vector<double> diag(N), off(N > 1 ? N - 1 : 0);
  for (int i = 0; i < N; ++i) diag[i] = 2.0 * i + 1.0 + beta;
  for (int i = 0; i + 1 < N; ++i) off[i] = std::sqrt((i + 1.0) * (i + 1.0 + beta));
  const auto guess = tridiagonal_eigenvalues(diag, off);

  QuadratureRule rule;
  rule.parameter = beta;
  rule.nodes.resize(N);
  rule.weights.resize(N);

  // log[Gamma(N+beta+1) / N!] = log Gamma(beta+1) + sum log1p(beta/i)
  double log_ratio = log_gamma(beta + 1.0);
  for (int i = 1; i <= N; ++i) log_ratio += std::log1p(beta / i);

  for (int i = 0; i < N; ++i) {
    const double lo = i == 0 ? 0.0 : 0.5 * (guess[i - 1] + guess[i]);
    const double hi = i + 1 < N ? 0.5 * (guess[i] + guess[i + 1])
                                : guess[i] + std::max(1.0, i > 0 ? guess[i] - guess[i - 1] : guess[i]);
    const double x = polish_root(N, beta, guess[i], lo, hi);
    rule.nodes[i] = x;

    double log_prev;
    if (N == 1) {
      log_prev = 0.0;  // L_0 = 1
    } else {
      const auto p = laguerre_pair(N, beta, x);
      log_prev = std::log(std::abs(p.previous)) + p.log_scale;
    }
    const double log_w = log_ratio + std::log(x) - 2.0 * std::log(N + beta) - 2.0 * log_prev;
    rule.weights[i] = std::exp(log_w);
  }
  return rule;
}

}  // namespace abc::specfun
