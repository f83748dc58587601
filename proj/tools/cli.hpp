#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace critex::cli {

enum ExitCode { ok = 0, input_error = 2, precondition = 3, internal = 4 };

/// Runs one command line (args[0] is the program name) and returns the exit
/// status. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace critex::cli
