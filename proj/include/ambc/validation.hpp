#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ambc/random.hpp"

namespace ambc {

struct CheckResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationOptions {
    SeedSpec seed{1, 0};
    std::size_t workers = 1;
};

// End-to-end criteria, each with its own sample sizes and tolerances.
CheckResult check_r2_exact_matches_mc(const ValidationOptions& opt);
CheckResult check_theorem_upper_bounds(const ValidationOptions& opt);
CheckResult check_antenna_scaling(const ValidationOptions& opt);
CheckResult check_bound_gap_shrinks(const ValidationOptions& opt);
CheckResult check_secondary_scaling_law(const ValidationOptions& opt);
CheckResult check_distributional_lemmas(const ValidationOptions& opt);
CheckResult check_sigma1m_asymptote(const ValidationOptions& opt);
CheckResult check_special_function_oracles(const ValidationOptions& opt);
CheckResult check_sweep_determinism(const ValidationOptions& opt);

std::vector<CheckResult> acceptance_checks(const ValidationOptions& opt);

// Fast per-module invariants (identities, bounds, limits).
std::vector<CheckResult> invariant_checks(const ValidationOptions& opt);

// Invariants followed by the acceptance criteria.
std::vector<CheckResult> run_validation(const ValidationOptions& opt);

std::string format_check_table(const std::vector<CheckResult>& checks);

}  // namespace ambc
