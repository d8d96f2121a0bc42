#pragma once

// The invariant suite run by `dpcalc verify`. Each check is self-contained,
// seeded, and compares the engine against a brute-force or closed-form oracle.

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace cherednik {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Check {
    std::string name;
    std::function<CheckResult()> run;
};

std::vector<Check> invariant_checks();

// Runs checks on up to `threads` workers; results come back in input order.
// Every check named in `negate` has its outcome flipped (mutation testing).
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, unsigned threads,
                                    const std::set<std::string>& negate = {});

}  // namespace cherednik
