#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conjunct::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Environment variable consulted for the default --format.
inline constexpr const char* kFormatEnv = "CONJUNCT_FORMAT";

/// Entry point behind the `conjunct` executable. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conjunct::cli
