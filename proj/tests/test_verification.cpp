#include "abc/verification.hpp"

#include <doctest.h>

#include <cstring>
#include <set>

using abc::CheckReport;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same(const CheckReport& a, const CheckReport& b) {
  return a.name == b.name && a.state.dimension == b.state.dimension && a.state.n == b.state.n &&
         a.state.q == b.state.q && a.state.k == b.state.k && a.state.mu0_text == b.state.mu0_text &&
         a.state.Z == b.state.Z && a.lambda == b.lambda && bit_equal(a.lhs, b.lhs) &&
         bit_equal(a.rhs, b.rhs) && bit_equal(a.rel_err, b.rel_err) && a.pass == b.pass &&
         a.exact == b.exact;
}

}  // namespace

TEST_CASE("grid shapes") {
  const auto g = abc::default_grid();
  CHECK(g.states_3d.size() == 5u * 5u * 5u * 5u * 2u);
  CHECK(g.states_2d.size() == 4u * 5u * 3u);
  CHECK(g.lambda_min == -4);
  CHECK(g.lambda_max == 6);
  for (const auto& s : g.states_3d) CHECK(s.flux().exact_mu0().has_value());
  const auto small = abc::small_grid();
  CHECK(small.states_3d.size() == 2u * 2u * 3u * 2u);
}

TEST_CASE("serial and parallel verification agree exactly") {
  for (const auto& grid : {abc::small_grid(), abc::default_grid()}) {
    const abc::VerifyOptions opts;
    const auto serial = abc::verify_serial(grid, opts);
    const auto parallel = abc::verify_parallel(grid, opts);
    REQUIRE(serial.size() == parallel.size());
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < serial.size(); ++i) mismatches += !same(serial[i], parallel[i]);
    CHECK(mismatches == 0);
    const auto summary = abc::summarize(serial);
    CHECK(summary.pass);
    CHECK(summary.n_failed == 0);
    CHECK(summary.max_rel_err < 1e-8);
  }
}

TEST_CASE("serial and parallel moment tables agree exactly") {
  const auto grid = abc::default_grid();
  const std::vector<int> lambdas{-4, -2, 0, 1, 3, 6};
  for (auto mode : {abc::Mode::Float, abc::Mode::Exact}) {
    const auto a = abc::moment_table_serial(grid.states_3d, lambdas, mode, mode == abc::Mode::Float);
    const auto b = abc::moment_table_parallel(grid.states_3d, lambdas, mode, mode == abc::Mode::Float);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].lambda == b.rows[i].lambda);
      CHECK(a.rows[i].status == b.rows[i].status);
      CHECK(a.rows[i].engine == b.rows[i].engine);
      CHECK(a.rows[i].oracle == b.rows[i].oracle);
    }
  }
  const auto c = abc::moment_table_serial(grid.states_2d, lambdas, abc::Mode::Float, true);
  const auto d = abc::moment_table_parallel(grid.states_2d, lambdas, abc::Mode::Float, true);
  REQUIRE(c.rows.size() == d.rows.size());
  for (std::size_t i = 0; i < c.rows.size(); ++i) CHECK(c.rows[i].engine == d.rows[i].engine);
}

TEST_CASE("a corrupted closed-form coefficient is caught") {
  const auto grid = abc::small_grid();
  for (std::size_t i = 0; i < abc::ClosedFormCoefficients{}.c.size(); ++i) {
    abc::VerifyOptions opts;
    opts.coeffs.c[i].num += 1;
    const auto summary = abc::summarize(abc::verify_serial(grid, opts));
    CHECK_MESSAGE(!summary.pass, "coefficient " << i);
  }
}

TEST_CASE("every expected check family appears") {
  const auto reports = abc::verify_serial(abc::small_grid(), {});
  std::set<std::string> names;
  for (const auto& r : reports) names.insert(r.name);
  for (const char* n :
       {"oracle_paths", "engine_vs_oracle", "engine_float_vs_exact", "divergence_agrees",
        "recurrence_oracle", "recurrence_exact", "closed_form_exact", "closed_form_vs_oracle",
        "kinetic_identity", "virial", "virial_kinetic", "virial_potential", "schwinger_exact",
        "schwinger_oracle", "orbit_r_most", "orbit_r_mean", "orbit_delta_r", "orbit_ratio",
        "fluctuation_ratio_exact", "kinetic_ratio_c", "kinetic_ratio_r",
        "kinetic_ratio_sum_exact", "gauge_shift_exact", "planar_closed_form_exact",
        "planar_closed_form_vs_oracle"})
    CHECK_MESSAGE(names.count(n) == 1, n);
  for (const auto& n : names) CHECK_MESSAGE(n.find("_error") == std::string::npos, n);
}
