#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylcq {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // first failure, empty when passed
    double seconds = 0.0;
};

/* Runs the full acceptance matrix.  fast skips the E6 parallelepiped scan.
 * When progress is set, one pass/fail line per criterion is printed as
 * results arrive. */
std::vector<CriterionResult> run_acceptance(bool fast = false, std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace weylcq
