#pragma once

#include <string>
#include <vector>

namespace expdisk {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;   // deterministic: measured values, no timings
    double seconds = 0.0;
};

// Runs the acceptance checks whose names contain `filter` (all of them when
// the filter is empty) and reports one result per check.  Tolerances and
// runtime limits are pinned inside each check.  Throws InputError if a
// nonempty filter matches nothing.
std::vector<CheckResult> run_acceptance(const std::string& filter = "");

}  // namespace expdisk
