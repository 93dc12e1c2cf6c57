#pragma once

#include <iosfwd>

namespace frbf::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Entry point of the frbf tool. Results go to `out` unless --out names a
/// file; diagnostics go to `err`.
///
/// Exit codes: 0 success, 2 configuration or restriction error, 3 when every
/// row of a sweep failed numerically.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frbf::app
