#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "oddrank/workspace.hpp"

namespace oddrank {

struct CriterionResult {
    int index = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    long long ms = 0;
};

/* Run the full acceptance suite (exact integer comparisons throughout).
 * When progress is given, one PASS/FAIL line is printed per criterion. */
std::vector<CriterionResult> run_acceptance(Workspace& ws, std::ostream* progress = nullptr);

bool all_pass(const std::vector<CriterionResult>& results);

} // namespace oddrank
