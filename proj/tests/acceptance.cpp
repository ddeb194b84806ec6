// Runs every end-to-end acceptance criterion and prints one line per check.
// Exits nonzero if any criterion fails.

#include <iostream>

#include "ambc/validation.hpp"

int main() {
    const ambc::ValidationOptions opt{{1, 0}, 1};
    int failed = 0;
    for (const ambc::CheckResult& c : ambc::acceptance_checks(opt)) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.id << " " << c.name << ": " << c.detail << std::endl;
        failed += !c.passed;
    }
    std::cout << failed << " of 9 criteria failed" << std::endl;
    return failed == 0 ? 0 : 1;
}
