/* Acceptance suite: runs every criterion end to end and prints one
 * pass/fail line each.  --fast skips the E6 parallelepiped scan. */

#include <cstring>
#include <iostream>

#include "weylcq/selftest.hpp"

int main(int argc, char** argv) {
    bool fast = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--fast") == 0) fast = true;

    const auto results = weylcq::run_acceptance(fast, &std::cout);
    int failed = 0;
    for (const auto& r : results)
        if (!r.passed) ++failed;
    if (failed) {
        std::cout << failed << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all " << results.size() << " criteria passed\n";
    return 0;
}
