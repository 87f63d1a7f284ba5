#pragma once

#include "hadamat/matrix.hpp"

namespace hadamat {

/// Pivot magnitude below this declares the factorization singular.
inline constexpr double kPivotEps = 1e-12;

/// Partial-pivot LU factorization, PA = LU packed in a single matrix.
struct LuFactors {
    Matrix lu;                 // L (unit diagonal, below) and U (on and above)
    std::vector<std::size_t> perm;
    int sign = 1;              // permutation sign
    bool singular = false;
};

LuFactors lu_factorize(const Matrix& a);

/// Inverse via LU; throws SingularError when a pivot falls below kPivotEps.
Matrix lu_invert(const Matrix& u);

Vector solve(const Matrix& u, const Vector& b);
Vector solve(const LuFactors& f, const Vector& b);

double determinant(const Matrix& u);

bool is_singular(const Matrix& u);

/// Right/left equilibrium potentials: U mu = 1, nu' U = 1'.
struct EquilibriumPotentials {
    Vector mu;
    Vector nu;
    double total_mass = 0.0;   // 1' mu
};

EquilibriumPotentials equilibrium_potentials(const Matrix& u);

} // namespace hadamat
