#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kantichain::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kInvalidInput = 2 };

/// Runs one command line. args[0] is the program name. JSON results go to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kantichain::cli
