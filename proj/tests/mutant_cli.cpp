// The CLI with one closed-form coefficient corrupted (numerator + 1).
// Built only under tests; `verify` must reject it.
#include "abc/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  abc::ClosedFormCoefficients coeffs;
  coeffs.c[MUTANT_INDEX].num += 1;
  return abc::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr,
                           coeffs);
}
