#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hadamat/linalg.hpp"
#include "hadamat/matrix.hpp"

namespace hadamat {

/// Membership verdict with a human-readable certificate.
/// Index certificates are 1-based and name the first violation in
/// row-major order; vector certificates carry the witnessing potential.
struct Verdict {
    bool ok = false;
    std::string detail;                                   // e.g. "singular", "entry (1,3) > 0"
    std::optional<std::pair<std::size_t, std::size_t>> where;  // 1-based
    std::optional<Vector> witness;
};

struct ClassReport {
    Verdict nonnegative;
    Verdict z_matrix;
    Verdict m_matrix;
    Verdict inverse_m;
    Verdict potential;
    Verdict bipotential;
    Verdict row_diag_dominant;   // U_ii >= U_ji for all j
    Verdict col_diag_dominant;   // U_ii >= U_ij for all j
};

Verdict is_nonnegative(const Matrix& m, const Tolerance& tol = {});
Verdict is_z_matrix(const Matrix& m, const Tolerance& tol = {});
Verdict is_m_matrix(const Matrix& m, const Tolerance& tol = {});
Verdict is_potential(const Matrix& u, const Tolerance& tol = {});
Verdict is_bipotential(const Matrix& u, const Tolerance& tol = {});
Verdict is_inverse_m(const Matrix& u, const Tolerance& tol = {});
Verdict is_entrywise_row_dominant(const Matrix& u, const Tolerance& tol = {});
Verdict is_entrywise_col_dominant(const Matrix& u, const Tolerance& tol = {});

ClassReport classify(const Matrix& u, const Tolerance& tol = {});

/// Restriction of U to keep x keep (0-based indices, kept in sorted order).
Matrix principal_submatrix(const Matrix& u, const std::vector<std::size_t>& keep);

} // namespace hadamat
