#ifndef COALITION_FORGE_CLI_HPP
#define COALITION_FORGE_CLI_HPP

#include <ostream>
#include <span>
#include <string>

namespace coalition_forge {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitStructural = 1,  // no full span, not representable, validation mismatch
  kExitParse = 2,       // unreadable input, malformed document, bad usage
};

/// Runs the tool. args[0] is the program name. Documents go to `out`,
/// diagnostics to `err`. Reads COALITION_FORGE_GUARD_N to override the
/// player-enumeration limit.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace coalition_forge

#endif  // COALITION_FORGE_CLI_HPP
