#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace abexact {

/// Outcome of one invariant suite: pass/fail, how many comparisons ran,
/// and the first counterexample when something disagreed.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;
};

struct VerifyOptions {
    /// Ceiling for the polynomial equivalence lattices.
    unsigned long poly_n_max = 10;
    /// Ceiling for the number equivalence lattices.
    unsigned long number_n_max = 20;
    /// Randomized property suites draw this many cases each.
    std::size_t random_cases = 200;
    /// Fixed seed: verification output is byte-deterministic.
    unsigned long long seed = 0x5eedab1eULL;
};

/// Runs every cross-formula and property suite; a suite failure never
/// stops the remaining suites.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

}  // namespace abexact
