#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace simplex_sections::cli {

enum ExitCode : int { kPass = 0, kCounterexample = 1, kUsage = 2, kNumeric = 3 };

/// Entry point shared by main() and the tests. `args` excludes the program
/// name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplex_sections::cli
