#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthent {

/// Parse and execute one CLI invocation (argv without the program name).
/// Returns the process exit code: 0 success, 1 usage error, 2 validation
/// error, 3 numerical failure (no optimization run converged). All normal
/// output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthent
