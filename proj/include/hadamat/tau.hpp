#pragma once

#include <optional>
#include <string>

#include "hadamat/hadamard.hpp"
#include "hadamat/matrix.hpp"

namespace hadamat {

enum class TauMethod { bisection, equilibrium_failure };

/// Threshold t* = inf{t >= 0 : I + tU leaves the class}. nullopt value means
/// membership still holds at t_max ("infinity").
struct TauResult {
    std::optional<double> value;
    TauMethod method = TauMethod::bisection;
    std::optional<double> witness_t;   // a t just above the threshold where membership fails
    std::string certificate;           // first failing condition at witness_t
};

/// Bisection on t -> is_bipotential(I + tU); valid because membership is an
/// interval in t. Singular I + tU counts as "outside".
TauResult tau_bisection(const Matrix& u, double t_max = 1e6, const Tolerance& tol = {});

/// Bisection on the weaker predicate "both equilibrium potentials of I + tU
/// are nonnegative".
TauResult tau_equilibrium_failure(const Matrix& u, double t_max = 1e6,
                                  const Tolerance& tol = {});

/// Compares the two detection thresholds; they agree exactly on the class of
/// matrices where the first equilibrium sign failure certifies exit.
struct TauAgreementReport {
    TauResult tau_membership;
    TauResult tau_equilibrium;
    bool both_infinite = false;
    double gap = 0.0;                        // |difference| when both finite
    bool agree = false;                      // both infinite, or gap <= 1e-6
    std::optional<bool> nonsingular_at_tau;  // when the threshold is finite
};

TauAgreementReport check_tau_agreement(const Matrix& u, double t_max = 1e6, const Tolerance& tol = {});

/// For a doubly dominant potential in increasing constant block form and a
/// strictly increasing convex f, f(U) should stay in the class.
struct CbfConvexReport {
    bool fu_bipotential = false;
    TauResult tau_fu;
};

CbfConvexReport check_cbf_convex(const Matrix& u, const ScalarFunction& f,
                                 const Tolerance& tol = {});

} // namespace hadamat
