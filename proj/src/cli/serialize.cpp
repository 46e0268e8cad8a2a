#include "abc/cli/serialize.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>

namespace abc::cli {

using json = nlohmann::ordered_json;

std::string format_double(double x) {
  if (!std::isfinite(x)) return {};
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

namespace {

std::string_view mode_name(Mode m) { return m == Mode::Exact ? "rational" : "float"; }

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json value_json(const MomentValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return abc::to_string(*r);
  return number_or_null(std::get<double>(v));
}

std::string value_cell(const MomentValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return abc::to_string(*r);
  return format_double(std::get<double>(v));
}

std::string range_text(const IntRange& r) {
  return r.lo == r.hi ? std::to_string(r.lo) : std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

json config_json(const RunConfig& cfg) {
  json c;
  c["command"] = to_string(cfg.command);
  if (cfg.command == Command::Verify) {
    c["grid"] = cfg.grid;
    c["tol"] = cfg.tol;
    c["failures_only"] = cfg.failures_only;
    return c;
  }
  c["dimension"] = cfg.dimension == 3 ? "3d" : "2d";
  c["n"] = range_text(cfg.n);
  if (cfg.dimension == 3) c["q"] = range_text(cfg.q);
  c["k"] = range_text(cfg.k);
  json mu = json::array();
  for (const auto& f : cfg.mu0) mu.push_back(f.to_string());
  c["mu0"] = std::move(mu);
  c["Z"] = cfg.Z;
  c["mode"] = mode_name(cfg.mode);
  if (cfg.command != Command::Spectrum) {
    c["lambda"] = range_text(cfg.lambda);
    c["oracle"] = cfg.with_oracle;
    c["tol"] = cfg.tol;
    if (cfg.a0) c["a0"] = *cfg.a0;
  }
  return c;
}

// The three state columns; q is blank in 2D.
void state_cells(std::ostream& os, const StateLabel& s) {
  os << s.n << ',';
  if (s.dimension == 3) os << s.q;
  os << ',' << s.k << ',' << format_double(s.mu0) << ',' << format_double(s.Z);
}

void state_fields(json& j, const StateLabel& s) {
  j["dimension"] = s.dimension;
  j["state_n"] = s.n;
  j["state_q"] = s.dimension == 3 ? json(s.q) : json(nullptr);
  j["state_k"] = s.k;
  j["mu0"] = s.mu0;
  j["mu0_exact"] = s.mu0_text;
  j["Z"] = s.Z;
}

std::string unit_tag(int lambda) { return "(a0/Z)^" + std::to_string(lambda); }

}  // namespace

void write_moments_csv(std::ostream& os, const MomentTable& table) {
  os << "state_n,state_q,state_k,mu0,Z,lambda,engine_value,oracle_value,rel_err,status\n";
  for (const auto& row : table.rows) {
    state_cells(os, row.state);
    os << ',' << row.lambda << ',' << (row.engine ? value_cell(*row.engine) : "") << ','
       << (row.oracle ? format_double(*row.oracle) : "") << ','
       << (row.rel_err ? format_double(*row.rel_err) : "") << ',' << row.status << '\n';
  }
}

void write_moments_json(std::ostream& os, const RunConfig& cfg, const MomentTable& table,
                        const RunSummary& summary, const std::vector<SweepTrend>& trends) {
  json doc;
  doc["config"] = config_json(cfg);
  json rows = json::array();
  for (const auto& row : table.rows) {
    json j;
    state_fields(j, row.state);
    j["lambda"] = row.lambda;
    j["unit"] = unit_tag(row.lambda);
    j["engine_value"] = row.engine ? value_json(*row.engine) : json(nullptr);
    j["oracle_value"] = row.oracle ? number_or_null(*row.oracle) : json(nullptr);
    j["rel_err"] = row.rel_err ? number_or_null(*row.rel_err) : json(nullptr);
    j["status"] = row.status;
    if (cfg.a0 && row.engine) {
      // lengths in a0/Z -> physical units
      const double scale = std::pow(*cfg.a0 / row.state.Z, row.lambda);
      j["physical_value"] = number_or_null(to_double(*row.engine) * scale);
    }
    rows.push_back(std::move(j));
  }
  doc["rows"] = std::move(rows);
  if (!trends.empty()) {
    json t = json::array();
    for (const auto& tr : trends)
      t.push_back({{"lambda", tr.lambda},
                   {"expected", tr.expected},
                   {"postcondition", tr.postcondition}});
    doc["trends"] = std::move(t);
  }
  doc["summary"] = {{"pass", summary.pass},
                    {"n_checks", summary.n_checks},
                    {"max_rel_err", number_or_null(summary.max_rel_err)}};
  os << doc.dump(1) << '\n';
}

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRow>& rows) {
  os << "state_n,state_q,state_k,mu0,Z,n_eff,alpha,energy\n";
  for (const auto& r : rows) {
    state_cells(os, r.state);
    os << ',' << value_cell(r.n_eff) << ',' << value_cell(r.alpha) << ','
       << value_cell(r.energy) << '\n';
  }
}

void write_spectrum_json(std::ostream& os, const RunConfig& cfg,
                         const std::vector<SpectrumRow>& rows) {
  json doc;
  doc["config"] = config_json(cfg);
  json out = json::array();
  for (const auto& r : rows) {
    json j;
    state_fields(j, r.state);
    j["n_eff"] = value_json(r.n_eff);
    j["alpha"] = value_json(r.alpha);
    j["energy"] = value_json(r.energy);
    j["energy_unit"] = "e^2/a0";
    out.push_back(std::move(j));
  }
  doc["rows"] = std::move(out);
  doc["summary"] = {{"pass", true}, {"n_checks", 0}, {"max_rel_err", 0.0}};
  os << doc.dump(1) << '\n';
}

void write_checks_csv(std::ostream& os, const std::vector<CheckReport>& reports) {
  os << "check,dimension,state_n,state_q,state_k,mu0,Z,lambda,lhs,rhs,rel_err,tol,exact,pass\n";
  for (const auto& r : reports) {
    os << r.name << ',' << r.state.dimension << ',';
    state_cells(os, r.state);
    os << ',' << (r.lambda ? std::to_string(*r.lambda) : "") << ',' << format_double(r.lhs)
       << ',' << format_double(r.rhs) << ',' << format_double(r.rel_err) << ','
       << format_double(r.tol) << ',' << (r.exact ? "true" : "false") << ','
       << (r.pass ? "true" : "false") << '\n';
  }
}

void write_checks_json(std::ostream& os, const RunConfig& cfg,
                       const std::vector<CheckReport>& reports, const VerifySummary& summary) {
  json doc;
  doc["config"] = config_json(cfg);
  json rows = json::array();
  for (const auto& r : reports) {
    if (cfg.failures_only && r.pass) continue;
    json j;
    j["check"] = r.name;
    state_fields(j, r.state);
    j["lambda"] = r.lambda ? json(*r.lambda) : json(nullptr);
    j["lhs"] = number_or_null(r.lhs);
    j["rhs"] = number_or_null(r.rhs);
    j["rel_err"] = number_or_null(r.rel_err);
    j["tol"] = r.tol;
    j["exact"] = r.exact;
    j["pass"] = r.pass;
    rows.push_back(std::move(j));
  }
  doc["rows"] = std::move(rows);
  doc["summary"] = {{"pass", summary.pass},
                    {"n_checks", summary.n_checks},
                    {"n_failed", summary.n_failed},
                    {"max_rel_err", number_or_null(summary.max_rel_err)}};
  os << doc.dump(1) << '\n';
}

}  // namespace abc::cli
