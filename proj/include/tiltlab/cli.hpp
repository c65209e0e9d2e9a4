#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiltlab::cli {

/// Run one subcommand. args excludes the program name. Returns the exit
/// code: 0 ok, 2 parse or validation failure, 3 precondition violation,
/// 4 arithmetic overflow, 5 internal check failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool out_is_tty = false);

}  // namespace tiltlab::cli
