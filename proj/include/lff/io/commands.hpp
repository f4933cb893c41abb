#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lff::cli {

enum ExitCode : int {
    Success = 0,
    Negative = 1,  // rejected word, distinguished pair
    InputError = 2,
    BudgetExceeded = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lff::cli
