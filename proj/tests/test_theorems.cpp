#include "abc/errors.hpp"
#include "abc/theorems.hpp"

#include <doctest.h>

#include <cmath>

using abc::FluxParam;
using abc::Mode;
using abc::QuantumState3D;
using abc::Rational;

namespace {
FluxParam mu(int p, int q) { return FluxParam::exact(Rational(p, q)); }
}  // namespace

TEST_CASE("report tolerance rule") {
  const abc::StateLabel s;
  CHECK(abc::make_report("x", s, 1.0 + 1e-9, 1.0, 1e-8).pass);
  CHECK_FALSE(abc::make_report("x", s, 1.0 + 1e-7, 1.0, 1e-8).pass);
  CHECK(abc::make_report("x", s, 1e-12, 0.0, 1e-8).pass);
  CHECK(abc::make_exact_report("x", s, Rational(1, 3), Rational(2, 6)).pass);
  CHECK_FALSE(abc::make_exact_report("x", s, Rational(1, 3), Rational(1, 3) + Rational(1, 1000000000)).pass);
}

TEST_CASE("virial theorem") {
  for (int n = 0; n <= 3; ++n)
    for (const auto& f : {mu(0, 1), mu(1, 4), mu(9, 10)})
      for (double Z : {1.0, 2.0}) {
        const auto reports = abc::virial_check(QuantumState3D(n, 1, -1, f, Z));
        REQUIRE(reports.size() == 3);
        for (const auto& r : reports) CHECK_MESSAGE(r.pass, r.name << " " << r.rel_err);
      }
  const auto p = abc::virial_partition(-1.0, -0.5);
  CHECK(p.kinetic == doctest::Approx(0.5));
  CHECK(p.potential == doctest::Approx(-1.0));
  const auto h = abc::virial_partition(2.0, 3.0);  // oscillator: equal split
  CHECK(h.kinetic == doctest::Approx(1.5));
  CHECK(h.potential == doctest::Approx(1.5));
}

TEST_CASE("generalized Schwinger identity") {
  for (int n = 0; n <= 3; ++n)
    for (int q = 0; q <= 2; ++q)
      for (const auto& f : {mu(1, 10), mu(1, 2)}) {
        const QuantumState3D s(n, q, 1, f, 2.0);
        CHECK(abc::schwinger_check(s, Mode::Exact).pass);
        CHECK(abc::schwinger_check(s, Mode::Float).pass);
      }
  CHECK_THROWS_AS(abc::schwinger_check(QuantumState3D(0, 0, 0), Mode::Exact), abc::SWaveExcluded);
  CHECK_THROWS_AS(abc::schwinger_check(QuantumState3D(1, 0, 0)), abc::SWaveExcluded);
}

TEST_CASE("circular orbit statistics") {
  const QuantumState3D s(0, 2, 1, mu(1, 4));
  const auto closed = abc::orbit_stats(s);
  const auto measured = abc::orbit_stats_from_moments(s);
  CHECK(measured.r_mean == doctest::Approx(closed.r_mean).epsilon(1e-13));
  CHECK(measured.delta_r == doctest::Approx(closed.delta_r).epsilon(1e-12));
  CHECK(measured.ratio == doctest::Approx(closed.ratio).epsilon(1e-12));
  CHECK(measured.r_most == doctest::Approx(closed.r_most).epsilon(1e-10));
  CHECK_THROWS_AS(abc::orbit_stats(QuantumState3D(1, 0, 0)), abc::NotCircular);
  CHECK_THROWS_AS(abc::kinetic_ratios(QuantumState3D(2, 0, 0)), abc::NotCircular);
}

TEST_CASE("fluctuation ratio is exact for circular states") {
  // n_eff in {1, 3/2, 2, 7/2, 10}
  const QuantumState3D states[] = {QuantumState3D(0, 0, 0), QuantumState3D(0, 0, 0, mu(1, 2)),
                                   QuantumState3D(0, 1, 0), QuantumState3D(0, 2, 0, mu(1, 2)),
                                   QuantumState3D(0, 9, 0)};
  const Rational n_eff[] = {1, Rational(3, 2), 2, Rational(7, 2), 10};
  for (int i = 0; i < 5; ++i) {
    REQUIRE(states[i].n_eff_exact() == n_eff[i]);
    CHECK(abc::fluctuation_ratio_squared_exact(states[i]) == 1 / (2 * n_eff[i] + 1));
  }
}

TEST_CASE("kinetic energy ratios") {
  for (int q = 0; q <= 3; ++q) {
    const QuantumState3D s(0, q, -1, mu(1, 4));
    const auto k = abc::kinetic_ratios(s);
    CHECK(k.r_c_oracle == doctest::Approx(k.r_c).epsilon(1e-10));
    CHECK(k.r_r_oracle == doctest::Approx(k.r_r).epsilon(1e-10));
    const auto [rc, rr] = abc::kinetic_ratios_exact(s);
    CHECK(rc + rr == 1);
  }
}

TEST_CASE("moment rows record errors as status") {
  const auto row = abc::moment_row(QuantumState3D(0, 0, 0), -3, Mode::Float, true);
  CHECK_FALSE(row.engine.has_value());
  CHECK_FALSE(row.oracle.has_value());
  CHECK(row.status == "DivergentMoment");
  const auto ok = abc::moment_row(QuantumState3D(0, 0, 0), 1, Mode::Exact, true);
  CHECK(std::get<Rational>(*ok.engine) == Rational(3, 2));
  CHECK(*ok.rel_err < 1e-14);
  const auto rational = abc::moment_row(QuantumState3D(0, 0, 0, FluxParam::from_mu0(0.3)), 1,
                                        Mode::Exact, false);
  CHECK(rational.status == "NotRational");
}

TEST_CASE("flux sweep trends at the ground state") {
  std::vector<FluxParam> grid;
  for (int i = 0; i < 20; ++i) grid.push_back(mu(i, 20));
  const QuantumState3D ground(0, 0, 0);
  for (int l : {-1, 0, 1, 2}) {
    const auto sweep = abc::flux_sweep(ground, grid, l, Mode::Exact, false);
    REQUIRE(sweep.expected.has_value());
    CHECK(sweep.postcondition);
    CHECK(sweep.table.rows.size() == grid.size());
  }
  CHECK(abc::flux_sweep(ground, grid, 1).expected == abc::Trend::Increasing);
  CHECK(abc::flux_sweep(ground, grid, -1).expected == abc::Trend::Decreasing);
  CHECK_FALSE(abc::flux_sweep(ground, grid, 3).expected.has_value());
  CHECK_FALSE(abc::flux_sweep(QuantumState3D(1, 0, 0), grid, 1).expected.has_value());
}
