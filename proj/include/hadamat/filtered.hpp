#pragma once

#include <optional>
#include <vector>

#include "hadamat/matrix.hpp"
#include "hadamat/partition.hpp"

namespace hadamat {

/// One layer a_s E_s b_s of a filtered representation (normalized factors:
/// the represented matrix is sum_s D_{a_s} E_s D_{b_s}).
struct FilteredLayer {
    Vector a;
    Vector b;
};

/// Filtered representation U = sum_s a_s E_s b_s over a wide-sense
/// filtration (repeated partitions allowed). The last partition must be
/// the discrete one so that E_l = I.
struct FilteredRep {
    std::vector<Partition> partitions;
    std::vector<FilteredLayer> layers;

    std::size_t n() const { return partitions.empty() ? 0 : partitions.front().n(); }
    std::size_t levels() const { return layers.size(); }

    void validate() const;
    Matrix materialize() const;

    /// Zero out layers 0..p-1, keeping the algorithm's U(p) truncation
    /// semantics without touching the filtration.
    FilteredRep truncated(std::size_t p) const;
};

/// One layer D_{C_s} F(R_s) + D_{Gamma_s} D_{p_s} F(R_s) D_{q_s} of a
/// special filtered matrix. C, Gamma are R_s-measurable; {p,q} is an
/// R_{s+1}-measurable 0/1 partition.
struct SfmLayer {
    Vector C;
    Vector Gamma;
    Vector p;
    Vector q;
};

struct SfmRep {
    std::vector<Partition> partitions;  // R_0 < ... < R_k, R_0 = N, R_k = F
    std::vector<SfmLayer> layers;       // one per partition; Gamma_k = 0

    std::size_t n() const { return partitions.empty() ? 0 : partitions.front().n(); }
    std::size_t levels() const { return layers.size(); }

    void validate() const;
    Matrix materialize() const;

    /// Normalized factor c_s = C_s .* F(R_s) 1 (likewise gamma_s).
    Vector c(std::size_t s) const;
    Vector gamma(std::size_t s) const;

    /// Expand into the general two-layers-per-level filtered form.
    FilteredRep to_filtered() const;
};

/// Full history of the backward recursion for (I + t U)^{-1} = I - N.
struct AlgoTrace {
    double t = 1.0;
    bool success = false;
    std::optional<int> stop_index;   // level where a lambda/mu went negative; -1 = final stage
    std::vector<Vector> lambda, mu, kappa, sigma;   // indexed by level, partial on failure
    std::vector<Vector> l, m, d;                    // SFM two-step extras (d may hold +inf)
    Vector lambda_final, mu_final;                  // lambda_{-1}, mu_{-1}
    Matrix n_matrix;                                // N, valid on success
};

/// Backward recursion for a general filtered representation.
AlgoTrace invert_filtered(const FilteredRep& rep, double t, const Tolerance& tol = {});

/// Two-step backward recursion for an SFM representation.
AlgoTrace invert_sfm(const SfmRep& rep, double t, const Tolerance& tol = {});

/// rho_s = E_s(p_s) p_s + E_s(q_s) q_s.
Vector rho(const SfmRep& rep, std::size_t s);

/// d-recursion from d_k = 1 checking nonnegativity and
/// rho_s gamma_s <= c_{s+1} + d_{s+1} at every level.
bool check_invM_condition(const SfmRep& rep, const Tolerance& tol = {});

/// Pure scan rho_s gamma_s <= c_{s+1} + gamma_{s+1}; implies I + tU in biP
/// for all t >= 0.
bool check_gum_condition(const SfmRep& rep, const Tolerance& tol = {});

/// Pure scan rho_s gamma_s <= sum_{r>s} c_r; same conclusion.
bool check_tail_sum_condition(const SfmRep& rep, const Tolerance& tol = {});

/// Decompose a matrix already in (recursive, contiguous-split) CBF shape
/// into a dyadic SFM; throws NotCbf when no split works.
SfmRep cbf_to_sfm(const Matrix& u);

/// Smallest t > 0 at which lambda_{-1}(t) or mu_{-1}(t) loses strict
/// positivity, by bisection; infinity (> t_max) reported as nullopt.
std::optional<double> tau_filtered(const FilteredRep& rep, double t_max = 1e6,
                                   const Tolerance& tol = {});

} // namespace hadamat
