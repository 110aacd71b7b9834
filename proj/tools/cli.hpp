#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nroots::cli {

/// Exit codes of the `nroots` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;    // precondition, parse, I/O or convergence failure
inline constexpr int kExitViolation = 2;  // a checked theorem failed on the input
inline constexpr int kExitUsage = 64;

/// Runs one command line (without the program name). Human-readable output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, continuing from `state`.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t state = 0xcbf29ce484222325ULL);

}  // namespace nroots::cli
