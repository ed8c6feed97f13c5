#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace delforge {

/// Process exit codes: the claim holds, the mathematics says no, or the
/// input/environment is unusable.
enum ExitCode : int { kVerified = 0, kRefuted = 1, kError = 2 };

/// Entry point of the `delforge` tool. `args` excludes the program name.
/// Certificates go to --out (stdout when absent); human-readable lines go
/// to `out`, or to `err` when stdout carries the JSON.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delforge
