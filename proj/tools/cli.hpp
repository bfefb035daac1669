#pragma once

#include <iosfwd>

namespace sigmaperm {

/// Runs the command-line tool with explicit streams. Returns the process
/// exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sigmaperm
