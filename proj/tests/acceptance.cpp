// Acceptance gate: one pass/fail line per criterion, nonzero exit on any failure.
#include <cmath>
#include <cstdio>
#include <string>

#include "hadamat/classes.hpp"
#include "hadamat/filtered.hpp"
#include "hadamat/hadamard.hpp"
#include "hadamat/linalg.hpp"
#include "hadamat/structure.hpp"
#include "hadamat/verify.hpp"
#include "helpers.hpp"

using namespace hadamat;
using hadamat::testing::u_beta;
using hadamat::testing::u_beta_rep;
using hadamat::testing::walk_potential;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

bool suite_clean(const std::string& name, int trials, std::size_t n_max,
                 double* max_residual = nullptr) {
    HarnessConfig cfg;
    cfg.trials = trials;
    cfg.n_max = n_max;
    const SuiteResult r = run_suite(name, cfg);
    if (max_residual) *max_residual = r.max_residual;
    return r.violations == 0;
}

void criterion_walk_example() {
    const Matrix inv = lu_invert(apply(fn_x2cos(), walk_potential()));
    const Matrix expected{{0.3590, -0.0975, 0.0027},
                          {-0.0975, 0.2372, -0.0975},
                          {0.0027, -0.0975, 0.3590}};
    const double err = max_norm_diff(inv, expected);
    const Verdict z = is_z_matrix(inv);
    const bool ok = err <= 5e-4 && !z.ok && z.where.has_value() &&
                    z.where->first == 1 && z.where->second == 3;
    report("3x3 walk potential under x^2-cos(x)+1: inverse matches, positive (1,3) entry", ok,
           "max entry error " + std::to_string(err));
}

void criterion_block_family() {
    bool ok = true;
    std::string detail;
    for (int k = 0; k <= 10; ++k) {
        const double beta = k / 10.0;
        const Matrix u = u_beta(beta);
        if (max_norm_diff(lu_invert(u), u_beta(-beta)) > 1e-12) {
            ok = false;
            detail = "inverse mismatch at beta=" + std::to_string(beta);
            break;
        }
        if (!is_inverse_m(u).ok) {
            ok = false;
            detail = "inverse-M fails at beta=" + std::to_string(beta);
            break;
        }
        const bool expect_bip = beta <= 0.5;
        if (is_bipotential(u).ok != expect_bip ||
            check_gum_condition(u_beta_rep(beta)) != expect_bip) {
            ok = false;
            detail = "membership threshold wrong at beta=" + std::to_string(beta);
            break;
        }
    }
    report("4x4 block family: explicit inverse, inverse-M everywhere, both-sided "
           "dominance exactly for beta <= 1/2", ok, detail);
}

void criterion_gum_loop() {
    int violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const Matrix u = generate_gum(n, 10000 + trial);
        if (!is_gum(u).ok) ++violations;
        if (!is_nbf(permute_similar(u, gum_to_nbf_permutation(u)))) ++violations;
        if (gum_nonsingular(u) != !is_singular(u)) ++violations;
        if (gum_nonsingular(u) && !is_bipotential(u).ok) ++violations;
        if (!is_gum(apply(fn_power(2.0), u)).ok) ++violations;
        if (!is_gum(apply(fn_step({0.5, 1.5}, {1.0, 3.0}), u)).ok) ++violations;
    }
    report("100 generated ultrametric matrices: recognized, reorderable to nested "
           "block form, combinatorial singularity test, dominance, stability under "
           "nondecreasing maps", violations == 0,
           violations ? std::to_string(violations) + " violations" : "");
}

} // namespace

int main() {
    criterion_walk_example();
    criterion_block_family();

    report("randomized suite: inverses of entrywise powers of potentials stay "
           "M-matrices (200 trials)", suite_clean("power", 200, 6));
    report("randomized suite: entrywise powers keep the kernel substochastic "
           "(200 trials)", suite_clean("markov", 200, 6));

    double residual = 0.0;
    const bool filt_ok = suite_clean("filtered_oracle", 200, 8, &residual);
    report("randomized suite: layered backward inversion matches the dense oracle "
           "(200 trials)", filt_ok && residual <= 1e-9,
           "max residual " + std::to_string(residual));

    criterion_gum_loop();

    report("randomized suite: the two threshold detections agree within 1e-6, "
           "permutation invariant (50 trials)", suite_clean("tau_agreement", 50, 6));

    const bool closures =
        suite_clean("shift_closure", 100, 6) && suite_clean("submatrix_closure", 100, 6);
    report("randomized suites: I + tU closure and principal submatrix closure "
           "(100 trials each)", closures);

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
