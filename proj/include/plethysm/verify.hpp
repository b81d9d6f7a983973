#pragma once

#include "plethysm/tomography.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace plethysm {

struct VerifyOptions {
    int n_max = 3;                             // bounds, closed-forms, inner-lift
    std::vector<std::pair<int, int>> nm{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}};  // duality
    int i_max = 40;                            // xi
    int samples = 50;                          // random r' = 2 instances in parsimony
    std::uint64_t seed = 1;
    int mu_max = 4;                            // restricted
    CountOptions count;
};

struct VerifyReport {
    std::string suite;
    bool passed = true;
    long checked = 0;
    /// First failing case, in enumeration order (smallest sizes first).
    std::string counterexample;
    std::vector<std::string> notes;
};

/// bounds, duality, closed-forms, xi, inner-lift, parsimony, kronecker, restricted
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
VerifyReport run_suite(const std::string& name, const VerifyOptions& opts = {});

}  // namespace plethysm
