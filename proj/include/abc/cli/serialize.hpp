#pragma once

// CSV and JSON encodings of CLI results. Doubles are written in shortest
// round-trip form in both, so a CSV cell and its JSON counterpart parse to
// the same value. Output order is the input order; nothing here reorders.

#include "abc/cli/config.hpp"
#include "abc/theorems.hpp"
#include "abc/verification.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace abc::cli {

/// Shortest round-trip decimal; empty for NaN and infinities.
std::string format_double(double x);

struct SpectrumRow {
  StateLabel state;
  MomentValue n_eff;
  MomentValue alpha;  // alpha_tilde in 2D
  MomentValue energy;  // e^2/a0
};

struct RunSummary {
  bool pass = true;
  std::size_t n_checks = 0;
  double max_rel_err = 0.0;
};

/// Trend verdict of one flux sweep, carried into the JSON output.
struct SweepTrend {
  int lambda = 0;
  std::string expected;  // "increasing", "decreasing", "constant" or "none"
  bool postcondition = true;
};

/// state_n,state_q,state_k,mu0,Z,lambda,engine_value,oracle_value,rel_err,status
void write_moments_csv(std::ostream& os, const MomentTable& table);
void write_moments_json(std::ostream& os, const RunConfig& cfg, const MomentTable& table,
                        const RunSummary& summary, const std::vector<SweepTrend>& trends = {});

/// state_n,state_q,state_k,mu0,Z,n_eff,alpha,energy
void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRow>& rows);
void write_spectrum_json(std::ostream& os, const RunConfig& cfg,
                         const std::vector<SpectrumRow>& rows);

/// check,dimension,state_n,state_q,state_k,mu0,Z,lambda,lhs,rhs,rel_err,tol,exact,pass
void write_checks_csv(std::ostream& os, const std::vector<CheckReport>& reports);
void write_checks_json(std::ostream& os, const RunConfig& cfg,
                       const std::vector<CheckReport>& reports, const VerifySummary& summary);

}  // namespace abc::cli
