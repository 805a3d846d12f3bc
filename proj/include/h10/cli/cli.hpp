#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace h10::cli {

/// Exit codes: 0 success or true, 1 false or failed check, 2 usage or input error.
inline constexpr int kOk = 0, kFalse = 1, kUsage = 2;

/// Runs one subcommand; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace h10::cli
