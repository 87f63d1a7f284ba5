#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "hadamat/classes.hpp"
#include "hadamat/matrix.hpp"

namespace hadamat {

/// Scalar function applied entrywise, with declared shape flags.
/// The flags are declarations; they are spot-checked by the test harness,
/// not enforced here.
struct ScalarFunction {
    std::string name;
    std::function<double(double)> eval;
    bool is_increasing = false;
    bool is_strictly_increasing = false;
    bool is_convex = false;
    double value_at_zero = 0.0;
    double domain_min = 0.0;
    double domain_max = std::numeric_limits<double>::infinity();
};

ScalarFunction fn_identity();
ScalarFunction fn_power(double alpha);           // x^alpha on [0,inf), alpha >= 1
ScalarFunction fn_x2cos();                       // x^2 - cos(x) + 1
ScalarFunction fn_expm1();                       // exp(x) - 1
/// Nondecreasing step function: 0 below the first threshold, then values[k]
/// for x >= thresholds[k]. values must be nondecreasing for the increasing flag.
ScalarFunction fn_step(std::vector<double> thresholds, std::vector<double> values);

/// Look up a registry function by name ("identity", "pow", "x2cos", "expm1").
ScalarFunction fn_by_name(const std::string& name, double alpha = 1.0);

/// Entrywise image f(U); throws DomainViolation if an entry leaves f's domain.
Matrix apply(const ScalarFunction& f, const Matrix& u);

/// Hadamard power exponent, constrained to alpha >= 1.
struct HadamardPower {
    double alpha;
    explicit HadamardPower(double a);
};

/// Entrywise alpha-th power of a nonnegative matrix; 0^alpha = 0.
Matrix hadamard_power(const Matrix& u, HadamardPower alpha);

/// Checker for "U in P, f strictly increasing convex, f(0)=0 implies
/// det f(U) > 0, f(U) has a nonnegative right equilibrium potential,
/// and U^{-1} f(U) is an M-matrix".
struct PotentialImageReport {
    double det_fu = 0.0;
    bool det_positive = false;
    bool right_equilibrium_nonneg = false;
    Vector right_equilibrium;
    bool m_matrix = false;          // verdict on U^{-1} f(U)
    bool fu_inverse_is_z = false;   // informative; may legitimately be false
    bool all_ok() const { return det_positive && right_equilibrium_nonneg && m_matrix; }
};

PotentialImageReport check_potential_image(const Matrix& u, const ScalarFunction& f,
                                    const Tolerance& tol = {});

/// Checker for "U^{-1} = I - P submarkov implies (U^(a))^{-1} = I - Q(a)
/// with Q(a) submarkov".
struct MarkovReport {
    Matrix q;                      // I - (U^(alpha))^{-1}
    bool q_nonnegative = false;
    bool q_row_substochastic = false;
    bool p_doubly_substochastic = false;  // input-side property
    bool q_col_substochastic = false;     // checked when the above holds
    bool all_ok() const {
        return q_nonnegative && q_row_substochastic &&
               (!p_doubly_substochastic || q_col_substochastic);
    }
};

MarkovReport check_markov_preservation(const Matrix& u, HadamardPower alpha,
                                       const Tolerance& tol = {});

/// Checker for "U in biP: A^(a) eta = b^(a) has a nonnegative solution",
/// with A = U minus its last row/column, b the head of the last column.
struct GeneralEquilibriumReport {
    Vector eta;
    bool eta_nonneg = false;
};

GeneralEquilibriumReport check_general_equilibrium(const Matrix& u, HadamardPower alpha,
                                                   const Tolerance& tol = {});

} // namespace hadamat
