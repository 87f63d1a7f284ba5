#include "hadamat/random_gen.hpp"

#include <algorithm>

#include "hadamat/linalg.hpp"

namespace hadamat {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(splitmix(splitmix(seed) ^ splitmix(trial * 0xda942042e4dd58b5ULL + 1)));
}

Matrix random_substochastic(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Matrix p(n);
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            p(i, j) = unit(rng);
            row += p(i, j);
        }
        const double target = 0.2 + 0.7 * unit(rng);
        for (std::size_t j = 0; j < n; ++j) p(i, j) *= target / row;
    }
    return p;
}

Matrix random_doubly_substochastic(std::size_t n, std::mt19937_64& rng) {
    Matrix p = random_substochastic(n, rng);
    for (std::size_t j = 0; j < n; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < n; ++i) col += p(i, j);
        if (col > 0.9)
            for (std::size_t i = 0; i < n; ++i) p(i, j) *= 0.9 / col;
    }
    return p;
}

Matrix random_potential(std::size_t n, std::mt19937_64& rng) {
    return lu_invert(Matrix::identity(n) - random_substochastic(n, rng));
}

Matrix random_bipotential(std::size_t n, std::mt19937_64& rng) {
    return lu_invert(Matrix::identity(n) - random_doubly_substochastic(n, rng));
}

Matrix random_inverse_m(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> sc(0.5, 2.0);
    Matrix u = random_potential(n, rng);
    Vector l(n), r(n);
    for (std::size_t i = 0; i < n; ++i) {
        l[i] = sc(rng);
        r[i] = sc(rng);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u(i, j) *= l[i] * r[j];
    return u;
}

namespace {

void fill_icbf(Matrix& u, std::size_t lo, std::size_t hi, double floor,
               std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (hi - lo == 1) {
        u(lo, lo) = floor + 0.5 + 1.5 * unit(rng);
        return;
    }
    std::uniform_int_distribution<std::size_t> cut(lo + 1, hi - 1);
    const std::size_t p = cut(rng);
    const double alpha = floor + unit(rng);
    const double beta = floor + unit(rng);
    for (std::size_t i = lo; i < p; ++i)
        for (std::size_t j = p; j < hi; ++j) {
            u(i, j) = alpha;
            u(j, i) = beta;
        }
    const double child_floor = std::min(alpha, beta);
    fill_icbf(u, lo, p, child_floor, rng);
    fill_icbf(u, p, hi, child_floor, rng);
}

} // namespace

Matrix random_increasing_cbf(std::size_t n, std::mt19937_64& rng) {
    Matrix u(n);
    fill_icbf(u, 0, n, 0.0, rng);
    return u;
}

} // namespace hadamat
