#pragma once

// Command-line configuration. Flags may also come from ABC_* environment
// variables (ABC_MU0, ABC_Z, ABC_MODE, ...); a flag on the command line wins.

#include "abc/core_model.hpp"
#include "abc/moment_engine.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace abc::cli {

enum class Command { Spectrum, Moments, Sweep, Verify };
enum class Format { Csv, Json };

/// Bad flags or values; the CLI exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// "a..b" or a single integer "a". Throws UsageError on an empty range.
IntRange parse_range(const std::string& text);

/// One mu0 literal: decimal or p/q. With `require_exact_binary`, decimals
/// must be exact binary fractions (0.25 yes, 0.1 no); p/q is always exact.
FluxParam parse_mu0(const std::string& text, bool require_exact_binary);

/// Comma list "0,1/4,0.5" or inclusive arithmetic grid "a:b:step",
/// generated exactly when the parts are exact.
std::vector<FluxParam> parse_mu0_grid(const std::string& text, bool require_exact_binary);

struct RunConfig {
  Command command = Command::Moments;
  int dimension = 3;
  IntRange n, q, k;
  std::vector<FluxParam> mu0{FluxParam{}};
  double Z = 1.0;
  IntRange lambda{1, 1};
  Mode mode = Mode::Float;
  Format format = Format::Csv;
  double tol = 1e-8;
  std::string output = "-";
  bool with_oracle = true;
  std::optional<double> a0;
  std::string grid = "default";
  bool failures_only = false;
  bool serial = false;
};

/// Parses argv-style arguments (without the program name). Returns nullopt
/// when help was requested and printed to `out`. Throws UsageError.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

std::string_view to_string(Command c);

}  // namespace abc::cli
