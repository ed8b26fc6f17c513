#pragma once

#include <iosfwd>

namespace ostab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInput = 2;

/// Runs the command line. Input files are read from --in (or stdin when
/// absent); results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ostab::cli
