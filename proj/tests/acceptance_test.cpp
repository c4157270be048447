// Acceptance suite: every criterion is an exact integer comparison. One
// PASS/FAIL line is printed per criterion; the process exits nonzero if any
// criterion fails.

#include <iostream>

#include "oddrank/acceptance.hpp"

int main() {
    oddrank::Workspace ws;
    auto results = oddrank::run_acceptance(ws, &std::cout);
    bool ok = oddrank::all_pass(results);
    std::cout << (ok ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: FAILURES PRESENT")
              << std::endl;
    return ok ? 0 : 1;
}
