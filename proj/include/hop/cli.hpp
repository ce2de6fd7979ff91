#pragma once

#include <iosfwd>

namespace hop {

/// Exit status of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

/// Runs one subcommand (verify, expand, lift, search, catalog, selftest).
int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err);

} // namespace hop
