#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgwb {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitVerification = 2 };

// Entry point of the lgwb command-line tool. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lgwb
