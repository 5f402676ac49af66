// Acceptance suite runner: one pass/fail line per criterion, exit 0 only
// when every criterion holds.
#include <cstdint>
#include <cstring>
#include <iostream>
#include <string>

#include "ttb/acceptance.hpp"

int main(int argc, char** argv) {
    ttb::AcceptanceOptions options;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) {
            options.seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (arg == "--workers" && i + 1 < argc) {
            options.workers = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: ttb_acceptance [--seed N] [--workers N]\n";
            return 1;
        }
    }
    const auto report = ttb::run_acceptance(options, std::cout);
    std::cout << (report.all_passed ? "ACCEPTANCE: all criteria passed"
                                    : "ACCEPTANCE: FAILURES present")
              << "\n";
    return report.all_passed ? 0 : 1;
}
