#ifndef TTB_ACCEPTANCE_HPP
#define TTB_ACCEPTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ttb {

struct AcceptanceOptions {
    std::uint64_t seed = 42;
    int workers = 1;
};

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AcceptanceReport {
    std::vector<CriterionResult> criteria;
    bool all_passed = true;
};

// Runs the full certification suite, printing one pass/fail line per
// criterion to `out` as results arrive.
AcceptanceReport run_acceptance(const AcceptanceOptions& options, std::ostream& out);

} // namespace ttb

#endif
