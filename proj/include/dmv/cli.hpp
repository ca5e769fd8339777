#pragma once

#include <string>
#include <vector>

namespace dmv::cli {

// Exit codes shared across subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitToleranceFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNotADisc = 3;
inline constexpr int kExitInconclusive = 4;
inline constexpr int kExitNoConvergence = 5;

int run(int argc, const char* const* argv);

// Same entry point for tests: args without the program name.
int run(const std::vector<std::string>& args);

}  // namespace dmv::cli
