#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kloos::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kSingleCeiling = std::uint64_t{1} << 22;
inline constexpr const char* kCeilingEnv = "KLOOSTERMAN_CEILING";

struct RunConfig {
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> ceiling;  // explicit flag or config value
    unsigned workers = 1;
    std::string output;                    // empty: stdout only
    std::string format = "json";
};

/// Runs one command line (args excludes the program name). Returns the process exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kloos::cli
