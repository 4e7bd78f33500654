#pragma once

#include <string>
#include <vector>

namespace heider::cli {

// Exit codes, also documented in the README and --help.
inline constexpr int kExitOk = 0;          // success
inline constexpr int kExitError = 1;       // I/O or internal failure
inline constexpr int kExitConfig = 2;      // bad flags, config file, or usage
inline constexpr int kExitNumerical = 3;   // numerical failure in a trial
inline constexpr int kExitOracleFail = 4;  // oracle count mismatch

/// Run the command line given argv-style arguments (argv[0] included).
int run(int argc, const char* const* argv);

/// Convenience overload for tests; `args` excludes the program name.
int run(const std::vector<std::string>& args);

}  // namespace heider::cli
