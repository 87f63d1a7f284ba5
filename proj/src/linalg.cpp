#include "hadamat/linalg.hpp"

#include <cmath>
#include <numeric>

namespace hadamat {

LuFactors lu_factorize(const Matrix& a) {
    const std::size_t n = a.size();
    LuFactors f;
    f.lu = a;
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::fabs(f.lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::fabs(f.lu(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (best < kPivotEps) { f.singular = true; return f; }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
            f.sign = -f.sign;
        }
        const double pivot = f.lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = f.lu(i, k) / pivot;
            f.lu(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= m * f.lu(k, j);
        }
    }
    return f;
}

Vector solve(const LuFactors& f, const Vector& b) {
    if (f.singular) throw SingularError();
    const std::size_t n = f.lu.size();
    if (b.size() != n) throw DimensionMismatch();
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    // forward: L y = Pb
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
    // back: U x = y
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= f.lu(ii, j) * x[j];
        x[ii] /= f.lu(ii, ii);
    }
    return x;
}

Vector solve(const Matrix& u, const Vector& b) {
    return solve(lu_factorize(u), b);
}

Matrix lu_invert(const Matrix& u) {
    const auto f = lu_factorize(u);
    if (f.singular) throw SingularError();
    const std::size_t n = u.size();
    Matrix inv(n);
    Vector e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        const Vector col = solve(f, e);
        e[j] = 0.0;
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

double determinant(const Matrix& u) {
    const auto f = lu_factorize(u);
    if (f.singular) return 0.0;
    double d = f.sign;
    for (std::size_t i = 0; i < u.size(); ++i) d *= f.lu(i, i);
    return d;
}

bool is_singular(const Matrix& u) {
    return lu_factorize(u).singular;
}

EquilibriumPotentials equilibrium_potentials(const Matrix& u) {
    EquilibriumPotentials eq;
    eq.mu = solve(u, ones(u.size()));
    eq.nu = solve(u.transpose(), ones(u.size()));
    eq.total_mass = sum(eq.mu);
    return eq;
}

} // namespace hadamat
