#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hadamat/linalg.hpp"
#include "helpers.hpp"

using namespace hadamat;
using hadamat::testing::u_beta;

TEST_CASE("inverse of a symmetric 2x2") {
    const Matrix a{{2, 1}, {1, 2}};
    const Matrix inv = lu_invert(a);
    CHECK(inv(0, 0) == doctest::Approx(2.0 / 3).epsilon(1e-14));
    CHECK(inv(0, 1) == doctest::Approx(-1.0 / 3).epsilon(1e-14));
    CHECK(max_norm_diff(a * inv, Matrix::identity(2)) < 1e-14);
}

TEST_CASE("determinant tracks row swaps and scaling") {
    CHECK(determinant(Matrix::identity(3)) == doctest::Approx(1.0));
    // one transposition of the identity flips the sign
    CHECK(determinant(Matrix{{0, 1}, {1, 0}}) == doctest::Approx(-1.0));
    CHECK(determinant(Matrix{{3, 0}, {0, 4}}) == doctest::Approx(12.0));
    CHECK(determinant(Matrix{{1, 2}, {2, 4}}) == doctest::Approx(0.0));
}

TEST_CASE("singular matrices are detected and refused") {
    const Matrix s{{1, 2}, {2, 4}};
    CHECK(is_singular(s));
    CHECK_FALSE(is_singular(Matrix::identity(2)));
    CHECK_THROWS_AS(lu_invert(s), SingularError);
    CHECK_THROWS_AS(solve(s, ones(2)), SingularError);
}

TEST_CASE("solve reproduces the right-hand side") {
    const Matrix a{{4, 1, 0.5}, {1, 3, 1}, {0.5, 1, 5}};
    const Vector b{1.0, -2.0, 0.25};
    const Vector x = solve(a, b);
    const Vector ax = a * x;
    for (std::size_t i = 0; i < 3; ++i) CHECK(ax[i] == doctest::Approx(b[i]).epsilon(1e-13));
}

TEST_CASE("equilibrium potentials solve both one-sided systems") {
    const Matrix u = hadamat::testing::walk_potential();
    const EquilibriumPotentials eq = equilibrium_potentials(u);
    const Vector umu = u * eq.mu;
    const Vector utnu = u.transpose() * eq.nu;
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(umu[i] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(utnu[i] == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(eq.total_mass == doctest::Approx(sum(eq.mu)));
    // for this potential U^{-1} = I - P, so mu = (I-P)1 = (.5, 0, .5)
    CHECK(eq.mu[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(eq.mu[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("block family inverts to its sign-flipped twin") {
    for (double beta : {0.0, 0.3, 0.7, 1.0}) {
        CHECK(max_norm_diff(lu_invert(u_beta(beta)), u_beta(-beta)) <= 1e-12);
    }
}

TEST_CASE("pivoting handles a zero leading entry") {
    const Matrix a{{0, 1}, {1, 0}};
    CHECK(max_norm_diff(lu_invert(a), a) < 1e-14);
}
