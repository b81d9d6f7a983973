#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plethysm {

/// Exit codes of the command line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_input_error = 2,
    exit_gate_failed = 3,
};

/// Runs one command. `args` excludes the program name. Worker count comes
/// from PLETHYSM_WORKERS (default 1).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plethysm
