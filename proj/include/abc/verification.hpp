#pragma once

// Grid verification kernels. Every state is checked independently, so the
// grid is a flat data-parallel loop: verify_serial is the reference,
// verify_parallel distributes states over OpenMP threads and concatenates
// per-state results in grid order, so both return identical reports.

#include "abc/core_model.hpp"
#include "abc/moment_engine.hpp"
#include "abc/theorems.hpp"

#include <string>
#include <vector>

namespace abc {

struct VerificationGrid {
  std::vector<QuantumState3D> states_3d;
  std::vector<QuantumState2D> states_2d;
  int lambda_min = -4;
  int lambda_max = 6;

  std::size_t size() const noexcept { return states_3d.size() + states_2d.size(); }
};

/// 3D: n, q in 0..4, k in -2..2, mu0 in {0, 1/10, 1/4, 1/2, 9/10}, Z in {1, 2}.
/// 2D: n in 0..3, k in -2..2, mu0 in {0, 1/4, 1/2}, Z = 1.
/// All mu0 carry exact values.
VerificationGrid default_grid();
/// A reduced grid for quick runs: n, q in 0..1, k in -1..1, mu0 in {0, 1/2}, Z = 1.
VerificationGrid small_grid();

struct VerifyOptions {
  double tol = 1e-8;
  ClosedFormCoefficients coeffs = ClosedFormCoefficients::standard();
};

/// All checks for one state; see README for the list.
std::vector<CheckReport> verify_state(const QuantumState3D& state, const VerificationGrid& grid,
                                      const VerifyOptions& opts);
std::vector<CheckReport> verify_state(const QuantumState2D& state, const VerificationGrid& grid,
                                      const VerifyOptions& opts);

std::vector<CheckReport> verify_serial(const VerificationGrid& grid, const VerifyOptions& opts);
std::vector<CheckReport> verify_parallel(const VerificationGrid& grid, const VerifyOptions& opts);

struct VerifySummary {
  bool pass = true;
  std::size_t n_checks = 0;
  std::size_t n_failed = 0;
  double max_rel_err = 0.0;
};
VerifySummary summarize(const std::vector<CheckReport>& reports);

/// Moment rows for every (state, lambda) pair, states outermost.
MomentTable moment_table_serial(const std::vector<QuantumState3D>& states,
                                const std::vector<int>& lambdas, Mode mode, bool with_oracle);
MomentTable moment_table_parallel(const std::vector<QuantumState3D>& states,
                                  const std::vector<int>& lambdas, Mode mode, bool with_oracle);
MomentTable moment_table_serial(const std::vector<QuantumState2D>& states,
                                const std::vector<int>& lambdas, Mode mode, bool with_oracle);
MomentTable moment_table_parallel(const std::vector<QuantumState2D>& states,
                                  const std::vector<int>& lambdas, Mode mode, bool with_oracle);

}  // namespace abc
