#pragma once

#include <string>
#include <vector>

namespace superchar {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;  // failure description or summary counts
};

/// Run the acceptance criteria. Quick mode runs a reduced grid of the same
/// checks, sized to finish well under a minute.
std::vector<CriterionResult> run_acceptance(bool quick);

/// Print one PASS/FAIL line per criterion to stdout; returns the number of
/// failures.
int report_acceptance(const std::vector<CriterionResult>& results);

} // namespace superchar
