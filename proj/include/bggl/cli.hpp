#pragma once

#include <cstdint>
#include <iosfwd>

namespace bggl::cli {

/// Seed used by every command when --seed is omitted.
inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Entry point of the `bggl` tool. Writes results to --out or `out`, and
/// diagnostics to `err`. Returns 0 on success, 2 on a usage error and 1 on a
/// data or model error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bggl::cli
