#ifndef NONNEG_TOOLS_CLI_HPP
#define NONNEG_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nonneg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,         // usage or parse error
  kExitNumerical = 2,     // numerical failure, including PROPOSITION_VIOLATION
  kExitVerification = 3,  // a claimed witness or certificate failed re-verification
};

/// Runs one CLI invocation. `args` excludes the program name. Errors are
/// reported on `err` as a single `error[CODE]: message` line, followed by
/// any multi-line diagnostics.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nonneg::cli

#endif  // NONNEG_TOOLS_CLI_HPP
