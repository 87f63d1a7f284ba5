#pragma once

#include <cstdint>
#include <random>

#include "hadamat/matrix.hpp"

namespace hadamat {

/// Independent engine for trial `trial` of a run with the given seed, so
/// trials are schedule-independent and reproducible.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Nonnegative matrix with row sums uniform in [0.2, 0.9].
Matrix random_substochastic(std::size_t n, std::mt19937_64& rng);

/// As above, then columns with sum above 0.9 are scaled down (shrinking
/// never breaks the row bounds).
Matrix random_doubly_substochastic(std::size_t n, std::mt19937_64& rng);

/// (I - P)^{-1} for substochastic P: nonnegative with a row diagonally
/// dominant M-matrix inverse.
Matrix random_potential(std::size_t n, std::mt19937_64& rng);

/// (I - P)^{-1} for doubly substochastic P: dominant on both sides.
Matrix random_bipotential(std::size_t n, std::mt19937_64& rng);

/// D_l (I - P)^{-1} D_r with positive scalings: inverse of an M-matrix,
/// generally not a potential.
Matrix random_inverse_m(std::size_t n, std::mt19937_64& rng);

/// Recursive constant-block construction with block minima kept above the
/// off-diagonal constants at every level.
Matrix random_increasing_cbf(std::size_t n, std::mt19937_64& rng);

} // namespace hadamat
