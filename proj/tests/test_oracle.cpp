#include "abc/errors.hpp"
#include "abc/oracle.hpp"

#include <doctest.h>

#include <cmath>

using abc::FluxParam;
using abc::QuantumState2D;
using abc::QuantumState3D;
using abc::RadialWavefunction;
using abc::Rational;

namespace {
FluxParam mu(int p, int q) { return FluxParam::exact(Rational(p, q)); }
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("wavefunctions are normalized and orthogonal") {
  for (int q = 0; q <= 2; ++q)
    for (const auto& f : {mu(0, 1), mu(1, 4), mu(9, 10)}) {
      const RadialWavefunction a(QuantumState3D(0, q, 1, f));
      const RadialWavefunction b(QuantumState3D(2, q, 1, f));
      const RadialWavefunction c(QuantumState3D(4, q, 1, f, 2.0));
      CHECK(abc::overlap(a, a) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(abc::overlap(b, b) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(abc::overlap(a, b)) < 1e-12);
      CHECK(abc::overlap(c, c) == doctest::Approx(1.0).epsilon(1e-12));
    }
  CHECK_THROWS_AS(abc::overlap(RadialWavefunction(QuantumState3D(0, 0, 0)),
                               RadialWavefunction(QuantumState3D(0, 1, 0))),
                  std::invalid_argument);
}

TEST_CASE("wavefunctions solve the radial equation") {
  for (int n : {0, 1, 3})
    for (double Z : {1.0, 2.0}) {
      const RadialWavefunction wf(QuantumState3D(n, 1, -1, mu(1, 4), Z));
      for (double r : {0.3, 1.0, 2.5, 6.0, 12.0}) {
        const double scale = std::abs(wf(r)) + std::abs(wf.second_derivative(r)) + 1e-3;
        CHECK(std::abs(wf.ode_residual(r)) / scale < 1e-10);
      }
    }
}

TEST_CASE("analytic derivative matches a finite difference") {
  const RadialWavefunction wf(QuantumState3D(2, 0, 1, mu(1, 10)));
  for (double r : {0.5, 2.0, 7.0}) {
    const double h = 1e-5;
    const double fd = (wf(r + h) - wf(r - h)) / (2 * h);
    CHECK(wf.derivative(r) == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("the two oracle paths agree") {
  for (int n = 0; n <= 4; ++n)
    for (double lambda : {-2.5, -1.0, 0.0, 1.0, 3.5, 6.0}) {
      const RadialWavefunction wf(QuantumState3D(n, 2, 0, mu(1, 4)));
      const auto e = abc::oracle_moment_paths(wf, lambda);
      CHECK(e.rel_diff() <= abc::kOraclePathTolerance);
    }
}

TEST_CASE("oracle reproduces frozen high-precision values") {
  CHECK(rel(abc::oracle_moment(QuantumState3D(0, 0, 0), 1.0), 1.5) < 1e-13);
  CHECK(rel(abc::oracle_moment(QuantumState3D(0, 0, 0), -2.0), 2.0) < 1e-13);
  CHECK(rel(abc::oracle_moment(QuantumState3D(0, 0, 0, mu(1, 2)), 2.0), 11.25) < 1e-13);
  CHECK(rel(abc::oracle_moment(QuantumState3D(1, 1, -1, mu(1, 2)), -4.0),
            0.0013962436286467939946) < 1e-12);
  CHECK(rel(abc::oracle_moment(QuantumState3D(2, 1, 1, mu(1, 4), 2.0), 6.0),
            9117445339.9555787444) < 1e-12);
  CHECK(rel(abc::oracle_moment_2d(QuantumState2D(0, 0), -1.0), 4.0) < 1e-13);
  CHECK(rel(abc::oracle_moment_2d(QuantumState2D(1, 1, mu(1, 4)), -3.0),
            0.029308432614217738185) < 1e-12);
}

TEST_CASE("oracle divergence") {
  CHECK_THROWS_AS(abc::oracle_moment(QuantumState3D(0, 0, 0), -3.0), abc::DivergentMoment);
  CHECK_NOTHROW(abc::oracle_moment(QuantumState3D(0, 0, 0), -2.9));
  CHECK_THROWS_AS(abc::oracle_moment_2d(QuantumState2D(0, 0, mu(1, 2)), -3.0),
                  abc::DivergentMoment);
}

TEST_CASE("kinetic integral") {
  CHECK(rel(abc::kinetic_weighted_integral(QuantumState3D(0, 1, 0), 2), 1.5) < 1e-12);
  CHECK(rel(abc::kinetic_weighted_integral(QuantumState3D(0, 0, 0), 0), 1.0) < 1e-12);
  CHECK(rel(abc::kinetic_weighted_integral(QuantumState3D(2, 1, 1, mu(1, 4), 2.0), 1),
            0.36734693877551020408) < 1e-12);
  CHECK_THROWS_AS(abc::kinetic_weighted_integral(QuantumState3D(0, 0, 0), -1),
                  abc::RecurrenceWindow);
}

TEST_CASE("most probable radius of circular states") {
  for (int q = 0; q <= 3; ++q)
    for (double Z : {1.0, 2.0}) {
      const QuantumState3D s(0, q, 1, mu(1, 4), Z);
      const double expected = s.n_eff() * s.n_eff() / Z;  // Bohr units
      CHECK(RadialWavefunction(s).most_probable_radius() ==
            doctest::Approx(expected).epsilon(1e-10));
    }
}
