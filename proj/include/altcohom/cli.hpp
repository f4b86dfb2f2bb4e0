#pragma once

#include <ostream>

namespace altcohom::cli {

enum ExitCode { kOk = 0, kUsage = 1, kParseError = 2, kResourceCap = 3, kFixtureFailure = 4 };

// Runs one command line (argv[0] is the program name); reports go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace altcohom::cli
