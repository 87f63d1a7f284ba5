#include "hadamat/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hadamat/linalg.hpp"

namespace hadamat {

ScalarFunction fn_identity() {
    ScalarFunction f;
    f.name = "identity";
    f.eval = [](double x) { return x; };
    f.is_increasing = f.is_strictly_increasing = true;
    f.is_convex = true;
    return f;
}

ScalarFunction fn_power(double alpha) {
    if (alpha < 1.0) throw PreconditionFailed("power exponent must be >= 1");
    ScalarFunction f;
    std::ostringstream os;
    os << "pow(" << alpha << ")";
    f.name = os.str();
    f.eval = [alpha](double x) { return x == 0.0 ? 0.0 : std::pow(x, alpha); };
    f.is_increasing = f.is_strictly_increasing = true;
    f.is_convex = true;
    return f;
}

ScalarFunction fn_x2cos() {
    ScalarFunction f;
    f.name = "x2cos";
    f.eval = [](double x) { return x * x - std::cos(x) + 1.0; };
    f.is_increasing = f.is_strictly_increasing = true;
    f.is_convex = true;
    return f;
}

ScalarFunction fn_expm1() {
    ScalarFunction f;
    f.name = "expm1";
    f.eval = [](double x) { return std::expm1(x); };
    f.is_increasing = f.is_strictly_increasing = true;
    f.is_convex = true;
    return f;
}

ScalarFunction fn_step(std::vector<double> thresholds, std::vector<double> values) {
    if (thresholds.size() != values.size())
        throw PreconditionFailed("step function needs one value per threshold");
    if (!std::is_sorted(thresholds.begin(), thresholds.end()))
        throw PreconditionFailed("step thresholds must be sorted");
    ScalarFunction f;
    f.name = "step";
    f.is_increasing = std::is_sorted(values.begin(), values.end()) &&
                      (values.empty() || values.front() >= 0.0);
    f.is_strictly_increasing = false;
    f.is_convex = false;
    f.eval = [t = std::move(thresholds), v = std::move(values)](double x) {
        double y = 0.0;
        for (std::size_t k = 0; k < t.size(); ++k)
            if (x >= t[k]) y = v[k];
        return y;
    };
    return f;
}

ScalarFunction fn_by_name(const std::string& name, double alpha) {
    if (name == "identity") return fn_identity();
    if (name == "pow") return fn_power(alpha);
    if (name == "x2cos") return fn_x2cos();
    if (name == "expm1") return fn_expm1();
    throw PreconditionFailed("unknown function name: " + name);
}

Matrix apply(const ScalarFunction& f, const Matrix& u) {
    Matrix r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) {
            const double x = u(i, j);
            if (x < f.domain_min || x > f.domain_max) {
                std::ostringstream os;
                os << "entry (" << i + 1 << "," << j + 1 << ") = " << x
                   << " outside domain of " << f.name;
                throw DomainViolation(os.str());
            }
            r(i, j) = f.eval(x);
        }
    return r;
}

HadamardPower::HadamardPower(double a) : alpha(a) {
    if (!(a >= 1.0)) throw PreconditionFailed("Hadamard power requires alpha >= 1");
}

Matrix hadamard_power(const Matrix& u, HadamardPower alpha) {
    if (alpha.alpha == 1.0) return u;
    return apply(fn_power(alpha.alpha), u);
}

PotentialImageReport check_potential_image(const Matrix& u, const ScalarFunction& f,
                                    const Tolerance& tol) {
    if (!f.is_strictly_increasing || !f.is_convex)
        throw PreconditionFailed("f must be strictly increasing and convex");
    if (f.value_at_zero != 0.0 || f.eval(0.0) != 0.0)
        throw PreconditionFailed("f(0) must be 0");
    if (!is_potential(u, tol).ok)
        throw PreconditionFailed("U is not a potential");

    PotentialImageReport rep;
    const Matrix fu = apply(f, u);
    rep.det_fu = determinant(fu);
    rep.det_positive = rep.det_fu > tol.abs_eps;

    try {
        rep.right_equilibrium = solve(fu, ones(u.size()));
        rep.right_equilibrium_nonneg =
            std::all_of(rep.right_equilibrium.begin(), rep.right_equilibrium.end(),
                        [&](double x) { return nonneg(x, tol); });
        rep.fu_inverse_is_z = is_z_matrix(lu_invert(fu), tol).ok;
    } catch (const SingularError&) {
        rep.right_equilibrium_nonneg = false;
    }

    const Matrix m = lu_invert(u) * fu;
    rep.m_matrix = is_m_matrix(m, tol).ok;
    return rep;
}

MarkovReport check_markov_preservation(const Matrix& u, HadamardPower alpha,
                                       const Tolerance& tol) {
    const std::size_t n = u.size();
    Matrix uinv;
    try {
        uinv = lu_invert(u);
    } catch (const SingularError&) {
        throw PreconditionFailed("U is singular");
    }
    const Matrix p = Matrix::identity(n) - uinv;
    if (!is_nonnegative(p, tol).ok)
        throw PreconditionFailed("U^{-1} is not of the form I - P with P >= 0");
    const Vector prow = p * ones(n);
    for (double s : prow)
        if (s > 1.0 + tol.abs_eps)
            throw PreconditionFailed("P is not substochastic");

    const Vector pcol = p.transpose() * ones(n);
    MarkovReport rep;
    rep.p_doubly_substochastic =
        std::all_of(pcol.begin(), pcol.end(),
                    [&](double s) { return s <= 1.0 + tol.abs_eps; });

    const Matrix ua = hadamard_power(u, alpha);
    rep.q = Matrix::identity(n) - lu_invert(ua);
    rep.q_nonnegative = is_nonnegative(rep.q, tol).ok;
    const Vector qrow = rep.q * ones(n);
    rep.q_row_substochastic =
        std::all_of(qrow.begin(), qrow.end(),
                    [&](double s) { return s <= 1.0 + tol.abs_eps; });
    if (rep.p_doubly_substochastic) {
        const Vector qcol = rep.q.transpose() * ones(n);
        rep.q_col_substochastic =
            std::all_of(qcol.begin(), qcol.end(),
                        [&](double s) { return s <= 1.0 + tol.abs_eps; });
    }
    return rep;
}

GeneralEquilibriumReport check_general_equilibrium(const Matrix& u, HadamardPower alpha,
                                                   const Tolerance& tol) {
    const std::size_t n = u.size();
    if (n < 2) throw PreconditionFailed("need n >= 2 to split off the last row/column");
    if (!is_bipotential(u, tol).ok)
        throw PreconditionFailed("U is not a bi-potential");

    std::vector<std::size_t> head(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) head[i] = i;
    const Matrix a = hadamard_power(principal_submatrix(u, head), alpha);
    Vector b(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        b[i] = u(i, n - 1) == 0.0 ? 0.0 : std::pow(u(i, n - 1), alpha.alpha);

    GeneralEquilibriumReport rep;
    rep.eta = solve(a, b);
    rep.eta_nonneg = std::all_of(rep.eta.begin(), rep.eta.end(),
                                 [&](double x) { return nonneg(x, tol); });
    return rep;
}

} // namespace hadamat
