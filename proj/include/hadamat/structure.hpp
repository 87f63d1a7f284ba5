#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hadamat/filtered.hpp"
#include "hadamat/matrix.hpp"

namespace hadamat {

/// Generalized-ultrametric verdict; on failure `triple` names the first
/// 1-based triple with no preferred element (or a 1-based pair via i=j slot
/// when entrywise diagonal dominance already fails).
struct GumVerdict {
    bool ok = false;
    std::string detail;
    std::optional<std::array<std::size_t, 3>> triple;
};

GumVerdict is_gum(const Matrix& u, const Tolerance& tol = {});

/// Symmetric generalized ultrametric.
bool is_ultrametric(const Matrix& u, const Tolerance& tol = {});

/// Recursive nested-block-form check on the given index order:
/// some split has constant off-diagonal blocks 0 <= alpha <= beta,
/// every pair in each diagonal block has min >= alpha and max >= beta,
/// and both blocks are recursively in the same form.
bool is_nbf(const Matrix& u, const Tolerance& tol = {});

/// (Pi U Pi')_{ij} = U_{perm[i], perm[j]} — row i of the result is row
/// perm[i] of the input.
Matrix permute_similar(const Matrix& u, const std::vector<std::size_t>& perm);

/// Ordering that puts a generalized ultrametric into nested block form;
/// result is verified with is_nbf before returning.
std::vector<std::size_t> gum_to_nbf_permutation(const Matrix& u, const Tolerance& tol = {});

/// Combinatorial nonsingularity test for generalized ultrametrics:
/// no zero row and no two equal rows.
bool gum_nonsingular(const Matrix& u, const Tolerance& tol = {});

enum class Trilean { yes, no, undecided };

struct CbfSearchResult {
    Trilean status = Trilean::undecided;
    std::optional<std::vector<std::size_t>> permutation;
};

/// Does some simultaneous row/column permutation put U into constant block
/// form with min{A,B} >= min{alpha,beta} at every level? Grouping search
/// first; exhaustive permutation search for n <= 8; undecided beyond.
CbfSearchResult is_increasing_cbf_permutation(const Matrix& u, const Tolerance& tol = {});

/// Contiguous-split increasing constant block form (no permutation).
bool is_increasing_cbf(const Matrix& u, const Tolerance& tol = {});

struct StructureReport {
    bool is_entrywise_diag_dominant = false;
    GumVerdict gum;
    bool is_ultrametric = false;
    bool is_nbf = false;
    std::optional<std::vector<std::size_t>> nbf_permutation;
    std::optional<bool> gum_nonsingular;   // present only when gum.ok
};

StructureReport structure_report(const Matrix& u, const Tolerance& tol = {});

/// Random special-filtered representation over a dyadic filtration whose
/// layer data satisfies the stability inequality at every level; its
/// materialization is a generalized ultrametric. Deterministic per seed.
SfmRep generate_gum_sfm(std::size_t n, std::uint64_t seed);

/// Materialized generate_gum_sfm instance under a random permutation;
/// post-verified with is_gum. Deterministic per seed.
Matrix generate_gum(std::size_t n, std::uint64_t seed);

struct ContrapositiveWitness {
    std::string fn_desc;
    double t = 0.0;
};

/// For a nonnegative non-GUM matrix, scan a family of nondecreasing step
/// functions built on the entry levels of U (plus geometric-scale variants
/// and the identity) and t in t_grid for a pair with I + t f(U) outside
/// the doubly dominant potential class. Returns the first witness found.
std::optional<ContrapositiveWitness> contrapositive_search(
    const Matrix& u, const std::vector<double>& t_grid, const Tolerance& tol = {});

} // namespace hadamat
