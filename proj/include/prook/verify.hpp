#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prook {

struct CheckResult {
    std::string name;
    bool passed = false;
    long long cases = 0;  // instances examined (stops at the first failure)
    std::string witness;  // first failing instance, empty when passed
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    long long total_cases() const;
};

// Suites: "monoid", "algebra", "repr", "chars", "wedderburn", or "all".
// n_max caps the exhaustive tiers; randomized tiers draw from the seed at
// fixed sizes and are reproducible.  Unknown names throw
// std::invalid_argument.  Every check rebuilds its own fixtures; nothing is
// read from disk.
VerifyReport run_verify(const std::string& suite, int n_max,
                        std::uint64_t seed);

} // namespace prook
