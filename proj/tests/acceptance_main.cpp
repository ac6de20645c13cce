// Acceptance suite runner: one pass/fail line per criterion.
// Usage: ramsey_acceptance [criterion], no argument runs all nine.

#include <cstdlib>
#include <iostream>

#include "ramsey/selftest.hpp"

int main(int argc, char** argv) {
    using namespace ramsey::selftest;
    if (argc > 1) {
        int id = std::atoi(argv[1]);
        if (id < 1 || id > criterion_count()) {
            std::cerr << "criterion must be 1.." << criterion_count() << "\n";
            return 2;
        }
        auto res = run_criterion(id);
        std::cout << res.line() << std::endl;
        return res.pass ? 0 : 1;
    }
    bool all_pass = true;
    for (const auto& res : run_all(&std::cout)) all_pass = all_pass && res.pass;
    return all_pass ? 0 : 1;
}
