#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace qdivisor::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_disagreement = 2;
inline constexpr int exit_usage = 64;
inline constexpr int exit_unknown_identity = 65;
inline constexpr int exit_insufficient_order = 66;

inline constexpr int builtin_default_order = 120;

enum class Format { json, csv, text };
enum class RouteChoice { direct, product, cheb, all };

// QDIVISOR_DEFAULT_ORDER if set, else 120. Throws std::invalid_argument when
// the variable is not a non-negative integer.
int default_order();

// Runs the qdivisor command line. Results go to `out` unless --output names a
// file; diagnostics go to `err`. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qdivisor::cli
