#ifndef G2AA_CLI_HPP
#define G2AA_CLI_HPP

#include <iosfwd>

namespace g2aa {

/// Process exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitRejected = 2, kExitMismatch = 3 };

/// Runs the command line tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace g2aa

#endif  // G2AA_CLI_HPP
