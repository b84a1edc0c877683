#ifndef FRACPLASMA_VALIDATION_HPP
#define FRACPLASMA_VALIDATION_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fracplasma {

struct ValidationCheck {
    std::string name;
    bool passed = false;
    double margin = 0.0; // measured value of the criterion quantity
    double bound = 0.0;  // the bound it is held against
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_passed() const;
};

struct ValidationOptions {
    // Fault-injection hook: additive shift applied to the Dawson value
    // inside the permittivity cross-checks. Test use only.
    double dawson_shift = 0.0;
};

// Runs every invariant group at its pinned tolerance.
ValidationReport run_validation_suite(const ValidationOptions& opts = {});

// One line per check: PASS/FAIL, name, measured vs bound.
void print_report(const ValidationReport& report, std::ostream& os);

} // namespace fracplasma

#endif
