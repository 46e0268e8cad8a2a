#include "abc/cli/app.hpp"

#include "abc/cli/serialize.hpp"
#include "abc/errors.hpp"
#include "abc/verification.hpp"

#include <fstream>
#include <iostream>

namespace abc::cli {

namespace {

std::vector<QuantumState3D> states_3d(const RunConfig& cfg) {
  std::vector<QuantumState3D> out;
  for (int n = cfg.n.lo; n <= cfg.n.hi; ++n)
    for (int q = cfg.q.lo; q <= cfg.q.hi; ++q)
      for (int k = cfg.k.lo; k <= cfg.k.hi; ++k)
        for (const auto& mu : cfg.mu0) out.emplace_back(n, q, k, mu, cfg.Z);
  return out;
}

std::vector<QuantumState2D> states_2d(const RunConfig& cfg) {
  std::vector<QuantumState2D> out;
  for (int n = cfg.n.lo; n <= cfg.n.hi; ++n)
    for (int k = cfg.k.lo; k <= cfg.k.hi; ++k)
      for (const auto& mu : cfg.mu0) out.emplace_back(n, k, mu, cfg.Z);
  return out;
}

std::vector<int> lambdas(const RunConfig& cfg) {
  std::vector<int> out;
  for (int l = cfg.lambda.lo; l <= cfg.lambda.hi; ++l) out.push_back(l);
  return out;
}

// A row fails when the engine disagrees with the oracle beyond tol or the
// oracle's own paths disagree. Divergent cells are reported, not failed.
RunSummary summarize_rows(const MomentTable& table, double tol) {
  RunSummary s;
  for (const auto& row : table.rows) {
    if (row.status == to_string(ErrorKind::OracleMismatch)) s.pass = false;
    if (!row.rel_err) continue;
    ++s.n_checks;
    if (!(*row.rel_err <= tol)) s.pass = false;
    if (*row.rel_err > s.max_rel_err) s.max_rel_err = *row.rel_err;
  }
  return s;
}

template <class State>
SpectrumRow spectrum_row(const State& s, Mode mode) {
  SpectrumRow row;
  row.state = StateLabel::of(s);
  if constexpr (std::is_same_v<State, QuantumState3D>) {
    if (mode == Mode::Exact) {
      row.n_eff = s.n_eff_exact();
      row.alpha = s.alpha_exact();
      row.energy = energy_3d_exact(s);
    } else {
      row.n_eff = s.n_eff();
      row.alpha = s.alpha();
      row.energy = energy_3d(s);
    }
  } else {
    if (mode == Mode::Exact) {
      row.n_eff = s.n_eff2_exact();
      row.alpha = s.alpha_tilde_exact();
      row.energy = energy_2d_exact(s);
    } else {
      row.n_eff = s.n_eff2();
      row.alpha = s.alpha_tilde();
      row.energy = energy_2d(s);
    }
  }
  return row;
}

int run_spectrum(const RunConfig& cfg, std::ostream& out) {
  std::vector<SpectrumRow> rows;
  if (cfg.dimension == 3)
    for (const auto& s : states_3d(cfg)) rows.push_back(spectrum_row(s, cfg.mode));
  else
    for (const auto& s : states_2d(cfg)) rows.push_back(spectrum_row(s, cfg.mode));
  if (cfg.format == Format::Csv)
    write_spectrum_csv(out, rows);
  else
    write_spectrum_json(out, cfg, rows);
  return kPass;
}

int emit_table(const RunConfig& cfg, std::ostream& out, const MomentTable& table,
               const std::vector<SweepTrend>& trends) {
  RunSummary summary = summarize_rows(table, cfg.tol);
  for (const auto& t : trends) summary.pass = summary.pass && t.postcondition;
  if (cfg.format == Format::Csv)
    write_moments_csv(out, table);
  else
    write_moments_json(out, cfg, table, summary, trends);
  return summary.pass ? kPass : kVerificationFailure;
}

int run_moments(const RunConfig& cfg, std::ostream& out) {
  MomentTable table;
  if (cfg.dimension == 3) {
    const auto states = states_3d(cfg);
    table = cfg.serial ? moment_table_serial(states, lambdas(cfg), cfg.mode, cfg.with_oracle)
                       : moment_table_parallel(states, lambdas(cfg), cfg.mode, cfg.with_oracle);
  } else {
    const auto states = states_2d(cfg);
    table = cfg.serial ? moment_table_serial(states, lambdas(cfg), cfg.mode, cfg.with_oracle)
                       : moment_table_parallel(states, lambdas(cfg), cfg.mode, cfg.with_oracle);
  }
  return emit_table(cfg, out, table, {});
}

std::string trend_name(const std::optional<Trend>& t) {
  if (!t) return "none";
  switch (*t) {
    case Trend::Increasing: return "increasing";
    case Trend::Decreasing: return "decreasing";
    case Trend::Constant: return "constant";
  }
  return "none";
}

// One sweep per (template state, lambda); rows keep that order.
int run_sweep(const RunConfig& cfg, std::ostream& out) {
  MomentTable table;
  table.mode = cfg.mode;
  std::vector<SweepTrend> trends;
  for (int n = cfg.n.lo; n <= cfg.n.hi; ++n)
    for (int q = cfg.q.lo; q <= cfg.q.hi; ++q)
      for (int k = cfg.k.lo; k <= cfg.k.hi; ++k)
        for (int l : lambdas(cfg)) {
          if (cfg.dimension == 3) {
            const auto sweep =
                flux_sweep(QuantumState3D(n, q, k, {}, cfg.Z), cfg.mu0, l, cfg.mode, cfg.with_oracle);
            table.rows.insert(table.rows.end(), sweep.table.rows.begin(), sweep.table.rows.end());
            trends.push_back({l, trend_name(sweep.expected), sweep.postcondition});
          } else {
            for (const auto& mu : cfg.mu0)
              table.rows.push_back(
                  moment_row(QuantumState2D(n, k, mu, cfg.Z), l, cfg.mode, cfg.with_oracle));
            trends.push_back({l, "none", true});
          }
        }
  return emit_table(cfg, out, table, trends);
}

int run_verify(const RunConfig& cfg, std::ostream& out, const ClosedFormCoefficients& coeffs) {
  const auto grid = cfg.grid == "small" ? small_grid() : default_grid();
  VerifyOptions opts;
  opts.tol = cfg.tol;
  opts.coeffs = coeffs;
  auto reports = cfg.serial ? verify_serial(grid, opts) : verify_parallel(grid, opts);
  const auto summary = summarize(reports);
  if (cfg.format == Format::Csv) {
    if (cfg.failures_only) std::erase_if(reports, [](const CheckReport& r) { return r.pass; });
    write_checks_csv(out, reports);
  } else {
    write_checks_json(out, cfg, reports, summary);
  }
  return summary.pass ? kPass : kVerificationFailure;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, const ClosedFormCoefficients& coeffs) {
  switch (cfg.command) {
    case Command::Spectrum: return run_spectrum(cfg, out);
    case Command::Moments: return run_moments(cfg, out);
    case Command::Sweep: return run_sweep(cfg, out);
    case Command::Verify: return run_verify(cfg, out, coeffs);
  }
  return kUsageError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const ClosedFormCoefficients& coeffs) {
  std::optional<RunConfig> cfg;
  try {
    cfg = parse_args(args, out);
  } catch (const UsageError& e) {
    err << "abc: " << e.what() << "\nRun 'abc --help' for usage.\n";
    return kUsageError;
  }
  if (!cfg) return kPass;  // help printed

  std::ofstream file;
  std::ostream* sink = &out;
  if (cfg->output != "-") {
    file.open(cfg->output);
    if (!file) {
      err << "abc: cannot open output file '" << cfg->output << "'\n";
      return kUsageError;
    }
    sink = &file;
  }
  try {
    const int code = run(*cfg, *sink, coeffs);
    sink->flush();
    if (code == kVerificationFailure) err << "abc: verification failed\n";
    return code;
  } catch (const std::invalid_argument& e) {
    err << "abc: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "abc: " << e.what() << '\n';
    return kVerificationFailure;
  }
}

}  // namespace abc::cli
