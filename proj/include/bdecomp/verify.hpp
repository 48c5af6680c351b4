#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bdecomp {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; ///< first counterexample, or a summary on success
};

/// Ranges for the exact-identity suite. The defaults are the full ranges;
/// tests shrink them.
struct VerifyOptions {
    unsigned stirling_max = 12;
    unsigned random_matrix_max = 30;
    unsigned decomposition_max_n = 50;
    unsigned two_route_max_n = 20;
    unsigned table_max_n = 12;
    unsigned inverse_max_n = 10;
    unsigned symmetry_max_n = 30;
    unsigned square_max_n = 30;
    unsigned limit_max_k = 12;
    unsigned seed = 20240601;
    bool include_limits = true; ///< rate checks at n in {10, 100, 1000}
};

/// Named checks in a fixed order; each returns its own result and never
/// throws (exceptions become failures).
struct NamedCheck {
    std::string name;
    std::function<CheckResult(const VerifyOptions&)> run;
};

const std::vector<NamedCheck>& exact_identity_checks();

/// Runs every check; `progress` (optional) sees each result as it finishes.
std::vector<CheckResult> run_exact_identities(const VerifyOptions& options = {},
                                              const std::function<void(const CheckResult&)>& progress = {});

} // namespace bdecomp
