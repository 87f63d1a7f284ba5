#include "hadamat/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "hadamat/errors.hpp"

namespace hadamat {

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> atoms)
    : n_(n), atoms_(std::move(atoms)) {
    atom_of_.assign(n_, n_);
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
        if (atoms_[a].empty()) throw PreconditionFailed("empty atom");
        std::sort(atoms_[a].begin(), atoms_[a].end());
        for (std::size_t i : atoms_[a]) {
            if (i >= n_) throw PreconditionFailed("atom index out of range");
            if (atom_of_[i] != n_) throw PreconditionFailed("atoms are not disjoint");
            atom_of_[i] = a;
        }
    }
    for (std::size_t i = 0; i < n_; ++i)
        if (atom_of_[i] == n_) throw PreconditionFailed("atoms do not cover {1..n}");
}

Partition Partition::trivial(std::size_t n) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return Partition(n, {all});
}

Partition Partition::discrete(std::size_t n) {
    std::vector<std::vector<std::size_t>> atoms(n);
    for (std::size_t i = 0; i < n; ++i) atoms[i] = {i};
    return Partition(n, std::move(atoms));
}

Vector Partition::atom_sizes() const {
    Vector w(n_);
    for (const auto& atom : atoms_)
        for (std::size_t i : atom) w[i] = static_cast<double>(atom.size());
    return w;
}

bool refines(const Partition& coarse, const Partition& fine) {
    if (coarse.n() != fine.n()) return false;
    for (const auto& atom : fine.atoms()) {
        const std::size_t host = coarse.atom_of(atom.front());
        for (std::size_t i : atom)
            if (coarse.atom_of(i) != host) return false;
    }
    return true;
}

bool is_measurable(const Vector& v, const Partition& r, double tol) {
    if (v.size() != r.n()) return false;
    for (const auto& atom : r.atoms()) {
        const double v0 = v[atom.front()];
        for (std::size_t i : atom)
            if (std::fabs(v[i] - v0) > tol) return false;
    }
    return true;
}

Matrix incidence_matrix(const Partition& r) {
    Matrix f(r.n());
    for (const auto& atom : r.atoms())
        for (std::size_t i : atom)
            for (std::size_t j : atom) f(i, j) = 1.0;
    return f;
}

Matrix conditional_expectation(const Partition& r) {
    Matrix e(r.n());
    for (const auto& atom : r.atoms()) {
        const double w = 1.0 / static_cast<double>(atom.size());
        for (std::size_t i : atom)
            for (std::size_t j : atom) e(i, j) = w;
    }
    return e;
}

Vector expect(const Partition& r, const Vector& v) {
    if (v.size() != r.n()) throw DimensionMismatch();
    Vector out(v.size());
    for (const auto& atom : r.atoms()) {
        double mean = 0.0;
        for (std::size_t i : atom) mean += v[i];
        mean /= static_cast<double>(atom.size());
        for (std::size_t i : atom) out[i] = mean;
    }
    return out;
}

bool Filtration::is_valid() const {
    if (partitions.empty()) return false;
    if (!partitions.front().is_trivial()) return false;
    if (!partitions.back().is_discrete()) return false;
    for (std::size_t s = 0; s + 1 < partitions.size(); ++s)
        if (!refines(partitions[s], partitions[s + 1])) return false;
    return true;
}

bool Filtration::is_strict() const {
    for (std::size_t s = 0; s + 1 < partitions.size(); ++s)
        if (partitions[s] == partitions[s + 1]) return false;
    return true;
}

bool Filtration::is_dyadic() const {
    for (std::size_t s = 0; s + 1 < partitions.size(); ++s) {
        const Partition& cur = partitions[s];
        const Partition& next = partitions[s + 1];
        std::map<std::size_t, std::size_t> children;  // coarse atom -> child count
        for (const auto& atom : next.atoms())
            children[cur.atom_of(atom.front())] += 1;
        for (const auto& atom : cur.atoms()) {
            const std::size_t cnt = children[cur.atom_of(atom.front())];
            if (atom.size() == 1) {
                if (cnt != 1) return false;
            } else {
                if (cnt != 2) return false;
            }
        }
    }
    return true;
}

} // namespace hadamat
