#pragma once

#include <iosfwd>

namespace clusterlab {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

/// Entry point of the `clusterlab` tool, with output streams injected so
/// tests can run it in-process. `in` backs the "-" input.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace clusterlab
