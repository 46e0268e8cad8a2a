#pragma once

#include <span>
#include <vector>

namespace abc::specfun {

/// ln Gamma(x) for x > 0. Stirling series after shifting the argument to
/// x >= 15 with the recurrence Gamma(x+1) = x Gamma(x).
/// Throws std::domain_error for x <= 0 or non-finite x.
double log_gamma(double x);

/// L_n^{(a)}(t) by the three-term recurrence in the degree.
double laguerre_eval(int n, double a, double t);

/// d/dt L_n^{(a)}(t) = -L_{n-1}^{(a+1)}(t).
double laguerre_derivative(int n, double a, double t);

/// Monomial expansion L_n^{(a)}(t) = sum_j c_j t^j with
/// c_j = (-1)^j C(n+a, n-j) / j!.
class LaguerreBasis {
 public:
  LaguerreBasis(int n, double a);

  int degree() const noexcept { return n_; }
  double parameter() const noexcept { return a_; }
  std::span<const double> coefficients() const noexcept { return coeffs_; }

  /// Horner evaluation of the monomial form.
  double operator()(double t) const noexcept;

 private:
  int n_;
  double a_;
  std::vector<double> coeffs_;
};

/// Gauss rule for the weight t^beta e^{-t} on (0, inf).
struct QuadratureRule {
  double parameter = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Generalized Gauss-Laguerre rule with N nodes. Nodes start from the
/// eigenvalues of the Jacobi matrix of the Laguerre recurrence, are polished
/// by Newton on L_N^{(beta)} (bisection when Newton leaves its bracket), and
/// weights come from Gamma(N+beta+1) t / (N! (N+beta)^2 L_{N-1}(t)^2).
/// Weights below the double range flush to zero (only for N beyond ~150).
/// Throws std::domain_error for N <= 0 or beta <= -1.
QuadratureRule gauss_laguerre(double beta, int N);

/// Node count used by the oracle: n + 8 + ceil(|lambda|/2), clamped to [20, 200].
int default_node_count(int n, double lambda);

/// Eigenvalues of the symmetric tridiagonal matrix (diag, offdiag), ascending.
/// offdiag[i] couples rows i and i+1; offdiag.size() == diag.size() - 1.
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> offdiag);

}  // namespace abc::specfun
