#ifndef JANUS_TOOLS_CLI_HPP
#define JANUS_TOOLS_CLI_HPP

#include <iosfwd>

namespace janus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming the directory for relative --output paths.
inline constexpr const char* kOutputDirEnv = "JANUS_OUTPUT_DIR";

/// Runs one command line. Results go to `out` (or the --output file),
/// diagnostics to `err`. Returns 0 on success, 1 on domain errors
/// (no real amplitude, degenerate state, no solution, failed checks) and 2 on
/// usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace janus::cli

#endif // JANUS_TOOLS_CLI_HPP
