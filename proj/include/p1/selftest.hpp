#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace p1 {

struct SelftestReport {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures; // one message per failed check

    bool ok() const { return failed == 0; }
};

/// Run the built-in invariant suites. Each suite's seed is derived from the
/// root seed and the suite's position, never from the worker layout, so the
/// report is identical for any worker count; `workers` only controls how many
/// suites run concurrently.
SelftestReport run_selftest(std::uint64_t root_seed, int workers = 4);

} // namespace p1
