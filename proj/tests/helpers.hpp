#pragma once

#include "hadamat/filtered.hpp"
#include "hadamat/linalg.hpp"
#include "hadamat/matrix.hpp"

namespace hadamat::testing {

/// 4x4 family: identity plus beta on the lower-left 2x2 block. Its inverse
/// is the same matrix with -beta; doubly dominant exactly for beta <= 1/2.
inline Matrix u_beta(double beta) {
    Matrix u = Matrix::identity(4);
    u(2, 0) = u(2, 1) = u(3, 0) = u(3, 1) = beta;
    return u;
}

inline SfmRep u_beta_rep(double beta) {
    SfmRep r;
    r.partitions = {Partition::trivial(4), Partition::discrete(4)};
    r.layers = {{Vector(4, 0.0), Vector(4, beta), {0, 0, 1, 1}, {1, 1, 0, 0}},
                {Vector(4, 1.0), Vector(4, 0.0), {1, 1, 1, 1}, {0, 0, 0, 0}}};
    return r;
}

/// 3x3 walk potential: U = (I - P)^{-1} for the symmetric path kernel.
inline Matrix walk_potential() {
    const Matrix p{{0, 0.5, 0}, {0.5, 0, 0.5}, {0, 0.5, 0}};
    return lu_invert(Matrix::identity(3) - p);
}

} // namespace hadamat::testing
