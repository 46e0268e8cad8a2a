#include "abc/cli/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace abc::cli {

namespace {

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw UsageError(std::string("invalid integer for ") + what + ": '" + std::string(s) + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

Rational parse_exact(const std::string& text, bool require_exact_binary) {
  const auto r = parse_rational(text);
  if (!r) throw UsageError("invalid mu0 literal '" + text + "' (expected decimal or p/q)");
  if (require_exact_binary && text.find('/') == std::string::npos && !is_binary_fraction(*r))
    throw UsageError("rational mode needs mu0 as p/q or an exact binary fraction, got '" + text +
                     "'");
  return *r;
}

IntRange singleton(int v) { return {v, v}; }

}  // namespace

IntRange parse_range(const std::string& text) {
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    IntRange r{parse_int(std::string_view(text).substr(0, dots), "range"),
               parse_int(std::string_view(text).substr(dots + 2), "range")};
    if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
    return r;
  }
  return singleton(parse_int(text, "range"));
}

FluxParam parse_mu0(const std::string& text, bool require_exact_binary) {
  return FluxParam::exact(parse_exact(text, require_exact_binary));
}

std::vector<FluxParam> parse_mu0_grid(const std::string& text, bool require_exact_binary) {
  std::vector<FluxParam> out;
  const auto colon = split(text, ':');
  if (colon.size() == 3) {
    const Rational a = parse_exact(colon[0], require_exact_binary);
    const Rational b = parse_exact(colon[1], require_exact_binary);
    const Rational step = parse_exact(colon[2], require_exact_binary);
    if (step <= 0) throw UsageError("mu0 grid step must be positive");
    if (b < a) throw UsageError("empty mu0 grid '" + text + "'");
    for (Rational x = a; x <= b; x += step) {
      out.push_back(FluxParam::exact(x));
      if (out.size() > 100000) throw UsageError("mu0 grid too large");
    }
    return out;
  }
  if (colon.size() != 1) throw UsageError("mu0 grid must be a list or a:b:step, got '" + text + "'");
  for (const auto& item : split(text, ',')) out.push_back(parse_mu0(item, require_exact_binary));
  return out;
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Spectrum: return "spectrum";
    case Command::Moments: return "moments";
    case Command::Sweep: return "sweep";
    case Command::Verify: return "verify";
  }
  return "?";
}

namespace {

// Raw flag values, shared by all subcommands (only one is ever parsed).
struct RawFlags {
  std::string dim = "3d";
  std::string state, n, q, k;
  std::string mu0, mu0_grid, flux;
  double Z = 1.0;
  std::string lambda;
  std::string mode = "float";
  std::string format;
  double tol = 1e-8;
  std::string output = "-";
  bool no_oracle = false;
  std::optional<double> a0;
  std::string grid = "default";
  bool failures_only = false;
  bool serial = false;
};

void add_state_flags(CLI::App* sc, RawFlags& f) {
  sc->add_option("--dim", f.dim, "3d or 2d")->envname("ABC_DIM")->capture_default_str();
  sc->add_option("--state", f.state, "single state n,q,k (3d) or n,k (2d)");
  sc->add_option("--n", f.n, "radial quantum number, a or a..b");
  sc->add_option("--q", f.q, "3d only, a or a..b");
  sc->add_option("--k", f.k, "a or a..b");
  sc->add_option("--mu0", f.mu0, "flux factor, decimal or p/q")->envname("ABC_MU0");
  sc->add_option("--mu0-grid", f.mu0_grid, "list 0,1/4,0.5 or grid a:b:step")
      ->envname("ABC_MU0_GRID");
  sc->add_option("--flux", f.flux, "flux in units of hc/e (mu0 = -flux)")->envname("ABC_FLUX");
  sc->add_option("--Z", f.Z, "nuclear charge")->envname("ABC_Z")->capture_default_str();
  sc->add_option("--mode", f.mode, "float or rational")->envname("ABC_MODE")->capture_default_str();
}

void add_output_flags(CLI::App* sc, RawFlags& f) {
  sc->add_option("--format", f.format, "csv or json")->envname("ABC_FORMAT");
  sc->add_option("-o,--output", f.output, "output path, - for stdout")
      ->envname("ABC_OUTPUT")
      ->capture_default_str();
  sc->add_flag("--serial", f.serial, "run the serial reference kernel");
}

void add_moment_flags(CLI::App* sc, RawFlags& f) {
  sc->add_option("--lambda", f.lambda, "power, a or a..b")->envname("ABC_LAMBDA");
  sc->add_flag("--no-oracle", f.no_oracle, "skip the oracle column");
  sc->add_option("--a0", f.a0, "Bohr radius; adds physical_value to JSON rows")
      ->envname("ABC_A0");
  sc->add_option("--tol", f.tol, "relative tolerance for engine vs oracle")
      ->envname("ABC_TOL")
      ->capture_default_str();
}

Mode parse_mode(const std::string& s) {
  if (s == "float") return Mode::Float;
  if (s == "rational") return Mode::Exact;
  throw UsageError("--mode must be float or rational, got '" + s + "'");
}

void apply_state(const RawFlags& f, RunConfig& cfg) {
  if (f.dim == "3d")
    cfg.dimension = 3;
  else if (f.dim == "2d")
    cfg.dimension = 2;
  else
    throw UsageError("--dim must be 3d or 2d, got '" + f.dim + "'");

  if (!f.state.empty()) {
    if (!f.n.empty() || !f.q.empty() || !f.k.empty())
      throw UsageError("--state cannot be combined with --n/--q/--k");
    const auto parts = split(f.state, ',');
    if (parts.size() != static_cast<std::size_t>(cfg.dimension))
      throw UsageError(cfg.dimension == 3 ? "--state expects n,q,k" : "--state expects n,k");
    cfg.n = singleton(parse_int(parts[0], "n"));
    if (cfg.dimension == 3) {
      cfg.q = singleton(parse_int(parts[1], "q"));
      cfg.k = singleton(parse_int(parts[2], "k"));
    } else {
      cfg.k = singleton(parse_int(parts[1], "k"));
    }
  } else {
    if (!f.n.empty()) cfg.n = parse_range(f.n);
    if (!f.q.empty()) cfg.q = parse_range(f.q);
    if (!f.k.empty()) cfg.k = parse_range(f.k);
  }
  if (cfg.dimension == 2 && !f.q.empty()) throw UsageError("--q is not defined in 2d");
  if (cfg.n.lo < 0 || cfg.q.lo < 0) throw UsageError("n and q must be >= 0");

  cfg.mode = parse_mode(f.mode);
  const bool strict = cfg.mode == Mode::Exact;
  const int given = !f.mu0.empty() + !f.mu0_grid.empty() + !f.flux.empty();
  if (given > 1) throw UsageError("give at most one of --mu0, --mu0-grid, --flux");
  if (!f.mu0.empty()) {
    cfg.mu0 = {parse_mu0(f.mu0, strict)};
  } else if (!f.mu0_grid.empty()) {
    cfg.mu0 = parse_mu0_grid(f.mu0_grid, strict);
  } else if (!f.flux.empty()) {
    cfg.mu0 = {FluxParam::exact(-parse_exact(f.flux, strict))};
  } else if (cfg.command == Command::Sweep) {
    cfg.mu0 = parse_mu0_grid("0:0.95:0.05", false);
  }

  if (!(f.Z > 0.0) || !std::isfinite(f.Z)) throw UsageError("--Z must be positive");
  cfg.Z = f.Z;
}

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Aharonov-Bohm-Coulomb spectra and radial moments", "abc"};
  app.require_subcommand(1);
  RawFlags f;

  auto* spectrum = app.add_subcommand("spectrum", "energies, n_eff and alpha per state");
  add_state_flags(spectrum, f);
  add_output_flags(spectrum, f);

  auto* moments = app.add_subcommand("moments", "<r^lambda> table, engine and oracle");
  add_state_flags(moments, f);
  add_output_flags(moments, f);
  add_moment_flags(moments, f);

  auto* sweep = app.add_subcommand("sweep", "moments across a mu0 grid with trend checks");
  add_state_flags(sweep, f);
  add_output_flags(sweep, f);
  add_moment_flags(sweep, f);

  auto* verify = app.add_subcommand("verify", "full theorem grid; exit 1 on any failure");
  add_output_flags(verify, f);
  verify->add_option("--grid", f.grid, "default or small")->envname("ABC_GRID")
      ->capture_default_str();
  verify->add_option("--tol", f.tol, "engine vs oracle tolerance")->envname("ABC_TOL")
      ->capture_default_str();
  verify->add_flag("--failures-only", f.failures_only, "emit only failing checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig cfg;
  if (*spectrum)
    cfg.command = Command::Spectrum;
  else if (*moments)
    cfg.command = Command::Moments;
  else if (*sweep)
    cfg.command = Command::Sweep;
  else
    cfg.command = Command::Verify;

  if (cfg.command != Command::Verify) apply_state(f, cfg);

  if (f.format.empty())
    cfg.format = cfg.command == Command::Verify ? Format::Json : Format::Csv;
  else if (f.format == "csv")
    cfg.format = Format::Csv;
  else if (f.format == "json")
    cfg.format = Format::Json;
  else
    throw UsageError("--format must be csv or json, got '" + f.format + "'");

  if (!(f.tol > 0.0) || !std::isfinite(f.tol)) throw UsageError("--tol must be positive");
  cfg.tol = f.tol;
  if (f.a0 && !(*f.a0 > 0.0 && std::isfinite(*f.a0))) throw UsageError("--a0 must be positive");
  cfg.a0 = f.a0;
  cfg.lambda = parse_range(f.lambda.empty() ? (cfg.command == Command::Sweep ? "-1..2" : "1")
                                            : f.lambda);
  cfg.output = f.output;
  cfg.with_oracle = !f.no_oracle;
  cfg.serial = f.serial;
  cfg.failures_only = f.failures_only;
  if (f.grid != "default" && f.grid != "small")
    throw UsageError("--grid must be default or small, got '" + f.grid + "'");
  cfg.grid = f.grid;
  return cfg;
}

}  // namespace abc::cli
