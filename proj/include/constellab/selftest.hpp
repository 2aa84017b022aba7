#pragma once

#include <string>
#include <vector>

namespace constellab {

/// Outcome of one invariant suite: how many checks ran and which failed.
struct SelftestResult {
    std::string suite;
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

/// Run every invariant suite.  Deterministic: randomized checks use fixed
/// seeds.  The CLI's selftest subcommand fails (exit 3) when any suite
/// reports a failure; the test binaries assert the same.
std::vector<SelftestResult> run_selftests();

}  // namespace constellab
