// Command-line front end; main() is a thin wrapper so tests can drive it.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sozeta {

enum ExitCode { kOk = 0, kUsage = 1, kDivergent = 2, kVerifyFailed = 3 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace sozeta
