#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bruhat::cli {

inline constexpr const char* kSchema = "bruhat-satake/1";

enum ExitCode { kPass = 0, kVerificationFailed = 1, kInvalidConfig = 2 };

// Parses argv (argv[0] is the program name), runs the subcommand and writes the
// report to --out, to $BRUHAT_REPORT_DIR/<group>-<cmd>.<ext>, or to `out`.
// Diagnostics go to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace bruhat::cli
