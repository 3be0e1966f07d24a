#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tripex::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalidInput = 2, kBudgetExhausted = 3 };

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tripex::cli
