#pragma once

#include <string>
#include <vector>

namespace cascal {

inline constexpr const char* kVersion = "0.1.0";

// Full command-line surface. `args` excludes the program name. Returns the
// process exit status; diagnostics go to stderr.
int run_cli(const std::vector<std::string>& args);

int run_cli(int argc, char** argv);

}  // namespace cascal
