#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace galileo::cli {

/// Exit codes: 0 success, 1 definite negative result, 2 usage error, 3 environment error.
enum ExitCode : int { ok = 0, negative = 1, usage = 2, environment = 3 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace galileo::cli
