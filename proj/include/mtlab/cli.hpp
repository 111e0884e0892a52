#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mtlab {

enum ExitCode : int { kExitTrue = 0, kExitFalse = 1, kExitInvalid = 2, kExitInternal = 3 };

/// Runs one subcommand; `args` excludes the program name. Vacuous verdicts
/// exit with kExitFalse and say "vacuous".
int command_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtlab
