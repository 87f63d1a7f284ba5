#include "hadamat/classes.hpp"

#include <sstream>

namespace hadamat {

namespace {

std::string entry_detail(const char* what, std::size_t i, std::size_t j, double v) {
    std::ostringstream os;
    os << what << " at (" << i + 1 << "," << j + 1 << "), value " << v;
    return os.str();
}

Verdict pass(std::string detail = "") {
    Verdict v;
    v.ok = true;
    v.detail = std::move(detail);
    return v;
}

Verdict fail_at(const char* what, std::size_t i, std::size_t j, double val) {
    Verdict v;
    v.ok = false;
    v.detail = entry_detail(what, i, j, val);
    v.where = {i + 1, j + 1};
    return v;
}

} // namespace

Verdict is_nonnegative(const Matrix& m, const Tolerance& tol) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (!nonneg(m(i, j), tol)) return fail_at("negative entry", i, j, m(i, j));
    return pass();
}

Verdict is_z_matrix(const Matrix& m, const Tolerance& tol) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i == j) continue;
            if (m(i, j) > tol.abs_eps)
                return fail_at("positive off-diagonal", i, j, m(i, j));
        }
    return pass();
}

Verdict is_m_matrix(const Matrix& m, const Tolerance& tol) {
    Verdict z = is_z_matrix(m, tol);
    if (!z.ok) return z;
    Matrix inv;
    try {
        inv = lu_invert(m);
    } catch (const SingularError&) {
        Verdict v;
        v.detail = "singular";
        return v;
    }
    return is_nonnegative(inv, tol);
}

Verdict is_potential(const Matrix& u, const Tolerance& tol) {
    Verdict nn = is_nonnegative(u, tol);
    if (!nn.ok) return nn;
    Matrix inv;
    try {
        inv = lu_invert(u);
    } catch (const SingularError&) {
        Verdict v;
        v.detail = "singular";
        return v;
    }
    Verdict z = is_z_matrix(inv, tol);
    if (!z.ok) {
        z.detail = "inverse is not a Z-matrix: " + z.detail;
        return z;
    }
    for (std::size_t i = 0; i < inv.size(); ++i)
        if (!positive(inv(i, i), tol))
            return fail_at("non-positive diagonal of inverse", i, i, inv(i, i));
    const Vector mu = inv * ones(u.size());
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (!nonneg(mu[i], tol)) {
            Verdict v = fail_at("negative right equilibrium entry", i, 0, mu[i]);
            v.where = {i + 1, i + 1};
            v.witness = mu;
            return v;
        }
    Verdict v = pass();
    v.witness = mu;
    return v;
}

Verdict is_bipotential(const Matrix& u, const Tolerance& tol) {
    Verdict right = is_potential(u, tol);
    if (!right.ok) return right;
    Verdict left = is_potential(u.transpose(), tol);
    if (!left.ok) {
        left.detail = "transpose: " + left.detail;
        return left;
    }
    // witness keeps mu; nu is recoverable as the transpose witness
    return right;
}

Verdict is_inverse_m(const Matrix& u, const Tolerance& tol) {
    Matrix inv;
    try {
        inv = lu_invert(u);
    } catch (const SingularError&) {
        Verdict v;
        v.detail = "singular";
        return v;
    }
    Verdict v = is_m_matrix(inv, tol);
    if (!v.ok) v.detail = "inverse is not an M-matrix: " + v.detail;
    return v;
}

Verdict is_entrywise_row_dominant(const Matrix& u, const Tolerance& tol) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j)
            if (u(i, i) < u(j, i) - tol.abs_eps)
                return fail_at("U_ii < U_ji", j, i, u(j, i));
    return pass();
}

Verdict is_entrywise_col_dominant(const Matrix& u, const Tolerance& tol) {
    return is_entrywise_row_dominant(u.transpose(), tol);
}

ClassReport classify(const Matrix& u, const Tolerance& tol) {
    ClassReport r;
    r.nonnegative = is_nonnegative(u, tol);
    r.z_matrix = is_z_matrix(u, tol);
    r.m_matrix = is_m_matrix(u, tol);
    r.inverse_m = is_inverse_m(u, tol);
    r.potential = is_potential(u, tol);
    r.bipotential = is_bipotential(u, tol);
    r.row_diag_dominant = is_entrywise_row_dominant(u, tol);
    r.col_diag_dominant = is_entrywise_col_dominant(u, tol);
    return r;
}

Matrix principal_submatrix(const Matrix& u, const std::vector<std::size_t>& keep) {
    if (keep.empty()) throw EmptySelection();
    for (std::size_t k : keep)
        if (k >= u.size()) throw DimensionMismatch("index out of range");
    Matrix a(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            a(i, j) = u(keep[i], keep[j]);
    return a;
}

} // namespace hadamat
