#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "hyperclique/snap.hpp"

namespace hyperclique::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitHeuristic = 3;

/// Process-level inputs the commands read besides argv; tests substitute them.
struct Environment {
  std::function<std::optional<std::string>(const std::string&)> getenv;
  /// Passed to fetch_snap (downloader, base URL).
  FetchOptions fetch;
};

Environment default_environment();

/// Parses argv and runs one subcommand. Results go to `out`, diagnostics to
/// `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const Environment& env = default_environment());

}  // namespace hyperclique::cli
