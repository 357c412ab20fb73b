#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mvrcg::cli {

inline constexpr const char* version = "0.1.0";

enum ExitCode : int { ok = 0, usage = 1, input_error = 2, internal_error = 3 };

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvrcg::cli
