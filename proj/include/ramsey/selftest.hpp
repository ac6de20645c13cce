#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;

    std::string line() const;  // "criterion 3 (regular-components): PASS ..."
};

int criterion_count();

/// Runs one acceptance criterion (1-based id).
CriterionResult run_criterion(int id);

/// Runs the full acceptance suite, printing one line per criterion to
/// `progress` as results arrive. Returns all results.
std::vector<CriterionResult> run_all(std::ostream* progress);

}  // namespace ramsey::selftest
