#ifndef RESONEST_TOOLS_CLI_HPP
#define RESONEST_TOOLS_CLI_HPP

#include <iosfwd>

namespace resonest::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitEstimation = 2;

/// Runs the command line and returns the process exit code. Results go to
/// `out` unless an output file is given; messages go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace resonest::cli

#endif
