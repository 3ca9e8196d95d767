#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace primerecip::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kTerminating = 3,
    kBudget = 4,
};

/// Runs the command line (without the program name). Data goes to `out`,
/// progress and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primerecip::cli
