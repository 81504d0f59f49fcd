// Acceptance suite runner: executes every criterion and prints one line each.
#include <iostream>

#include "supergeom/report.hpp"

int main() {
    int failed = sg::run_acceptance(std::cout);
    if (failed) {
        std::cout << failed << " criterion(s) FAILED\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
