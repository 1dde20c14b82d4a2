#pragma once

#include <iosfwd>

namespace arboreal::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;      // NotFull verdict or a failing suite
inline constexpr int exit_parse = 2;        // bad arguments or input text
inline constexpr int exit_degenerate = 3;   // Res(P,Q) = 0, repeated critical point, polynomial
inline constexpr int exit_critical_hit = 4; // DegenerateCriticalHit
inline constexpr int exit_inconclusive = 5;
inline constexpr int exit_domain = 6;       // outside the supported domain or a size guard
inline constexpr int exit_internal = 7;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arboreal::cli
