#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rbdq {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitNotRotaBaxter = 1,
    kExitInputError = 2,
    kExitLimit = 3,
    kExitOutsideFamilies = 4,
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbdq
