#pragma once

#include <ostream>

namespace pblring::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitConstruction = 3;
inline constexpr int kExitBounds = 4;
inline constexpr int kExitInvariant = 5;

/// Runs the command line; output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pblring::cli
