#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zeroloc {

/// Runs the command-line interface against the given argument list
/// (excluding the program name). stdout-bound data goes to `out`,
/// diagnostics to `err`. Returns the process exit code:
///   0 success / verification pass
///   1 verification violation
///   2 parse or usage error
///   3 invalid trinomial / case mismatch
///   4 solver error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeroloc
