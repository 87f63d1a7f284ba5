#pragma once

#include <cstddef>
#include <vector>

#include "hadamat/matrix.hpp"

namespace hadamat {

/// Set partition of {0..n-1} into disjoint nonempty atoms.
class Partition {
public:
    Partition() = default;
    Partition(std::size_t n, std::vector<std::vector<std::size_t>> atoms);

    static Partition trivial(std::size_t n);     // one atom {0..n-1}
    static Partition discrete(std::size_t n);    // n singletons

    std::size_t n() const { return n_; }
    const std::vector<std::vector<std::size_t>>& atoms() const { return atoms_; }
    std::size_t atom_of(std::size_t i) const { return atom_of_[i]; }
    bool same_atom(std::size_t i, std::size_t j) const { return atom_of_[i] == atom_of_[j]; }

    bool is_discrete() const { return atoms_.size() == n_; }
    bool is_trivial() const { return atoms_.size() == 1; }

    /// Vector of atom sizes per index: w = F(R) 1.
    Vector atom_sizes() const;

    bool operator==(const Partition& other) const { return atom_of_ == other.atom_of_; }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<std::size_t>> atoms_;
    std::vector<std::size_t> atom_of_;
};

/// Every atom of fine contained in an atom of coarse.
bool refines(const Partition& coarse, const Partition& fine);

/// v constant on every atom, within tol.
bool is_measurable(const Vector& v, const Partition& r, double tol = 0.0);

/// 0/1 incidence matrix F(R).
Matrix incidence_matrix(const Partition& r);

/// Conditional expectation E_R = D_w^{-1} F(R); doubly stochastic projection.
Matrix conditional_expectation(const Partition& r);

/// E_R applied to a vector (atom means), without forming the matrix.
Vector expect(const Partition& r, const Vector& v);

/// Increasing chain of comparable partitions, trivial first, singletons last.
struct Filtration {
    std::vector<Partition> partitions;

    std::size_t n() const { return partitions.empty() ? 0 : partitions.front().n(); }
    std::size_t levels() const { return partitions.size(); }

    bool is_valid() const;    // comparable, starts at N, ends at F
    bool is_strict() const;   // consecutive partitions differ
    bool is_dyadic() const;   // every non-trivial atom splits into exactly two
};

} // namespace hadamat
