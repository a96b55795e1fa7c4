#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ramanujan/numtheory.hpp"

namespace ramanujan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Replaceable pieces for fault-injection runs of the self-test.
struct SelftestHooks {
    std::function<long(nt::Natural, long)> ramanujan_sum;
};

struct Check {
    std::string name;
    std::string anchor;  // where the expected value comes from
    bool passed = false;
    std::string detail;
};

enum class SelftestLevel { quick, full };

std::vector<Check> run_selftest(SelftestLevel level, const SelftestHooks& hooks = {});

/// Parses `args` (without the program name) and runs one subcommand.
/// Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const SelftestHooks& hooks = {});

}  // namespace ramanujan::cli
