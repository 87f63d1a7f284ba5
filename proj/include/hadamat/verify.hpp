#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hadamat/matrix.hpp"

namespace hadamat {

struct HarnessConfig {
    std::uint64_t seed = 1;
    int trials = 100;
    std::size_t n_max = 6;
    std::vector<double> alphas{1.5, 2.0, 3.0, 7.0};
    std::vector<double> t_grid{0.5, 1.0, 10.0};
    double t_max = 1e6;
    Tolerance tol;
};

struct SuiteResult {
    std::string name;
    int trials = 0;
    int violations = 0;
    double max_residual = 0.0;
    std::vector<std::string> notes;
};

/// Randomized property suite for one named result. Known names:
/// power | markov | potential_image | gum_stability | submatrix_closure |
/// shift_closure | filtered_oracle | tau_agreement | contrapositive.
/// Throws UnknownSuite for anything else.
SuiteResult run_suite(const std::string& name, const HarnessConfig& cfg);

std::vector<std::string> suite_names();

} // namespace hadamat
