#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inmatch {

/// Exit statuses shared by every subcommand.
enum exit_status : int {
    exit_ok = 0,
    exit_input = 1,     ///< parse or precondition problem (also: verify found the set invalid)
    exit_guarantee = 2, ///< bound or trace check failed; always a defect
    exit_budget = 3,    ///< exact search ran out of nodes
};

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace inmatch
