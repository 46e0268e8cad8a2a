#pragma once

#include "abc/cli/config.hpp"
#include "abc/moment_engine.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace abc::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Entry point behind the `abc` executable. `args` excludes the program name.
/// Closed forms are evaluated with `coeffs`, which only tests replace.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const ClosedFormCoefficients& coeffs = ClosedFormCoefficients::standard());

/// Runs an already parsed configuration, writing the report to `out`.
int run(const RunConfig& cfg, std::ostream& out,
        const ClosedFormCoefficients& coeffs = ClosedFormCoefficients::standard());

}  // namespace abc::cli
