#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubic {

constexpr int kExitOk = 0;
constexpr int kExitMathError = 1;
constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`. Returns 0 on success, 1 on a
/// mathematical error such as a singular element or a failed identity, and
/// 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubic
