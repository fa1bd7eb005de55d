#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liecurv::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
  kExitDegenerateSection = 3,
  kExitTangentViolation = 4,
};

/// Entry point behind the liecurv executable. `args` excludes the program
/// name. Reports go to `out` (or --out), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liecurv::cli
