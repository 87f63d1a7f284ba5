#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hadamat/classes.hpp"
#include "hadamat/hadamard.hpp"
#include "hadamat/linalg.hpp"
#include "hadamat/structure.hpp"

using namespace hadamat;

namespace {

// 4x4 lower-triangular-plus-identity matrix outside the ultrametric class.
Matrix non_gum_example() {
    return Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 0, 1}};
}

} // namespace

TEST_CASE("ultrametric triple test") {
    // any 2x2 nonnegative entrywise diagonally dominant matrix qualifies
    CHECK(is_gum(Matrix{{2, 1}, {0.5, 3}}).ok);
    CHECK(is_gum(Matrix{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}).ok);
    CHECK_FALSE(is_gum(non_gum_example()).ok);
    const GumVerdict v = is_gum(non_gum_example());
    CHECK(v.triple.has_value());
    // dominance failure is certified by a pair
    const GumVerdict d = is_gum(Matrix{{1, 0}, {2, 1}});
    CHECK_FALSE(d.ok);
    CHECK(d.detail == "diagonal dominance fails");
}

TEST_CASE("symmetric special case") {
    CHECK(is_ultrametric(Matrix{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}));
    CHECK_FALSE(is_ultrametric(Matrix{{2, 1}, {0.5, 3}}));   // not symmetric
    CHECK(is_ultrametric(Matrix::identity(4)));
}

TEST_CASE("nested block form recognition") {
    CHECK(is_nbf(Matrix{{3.0}}));
    // catalog 4x4 with nested constants
    const Matrix u{{5, 3, 1, 1}, {4, 5, 1, 1}, {2, 2, 5, 2.5}, {2, 2, 3, 5}};
    CHECK(is_nbf(u));
    CHECK_FALSE(is_nbf(non_gum_example()));
    // alpha > beta on the only split: not nested
    CHECK_FALSE(is_nbf(Matrix{{2, 2}, {1, 2}}));
    CHECK(is_nbf(Matrix{{2, 1}, {2, 2}}));
}

TEST_CASE("ordering construction round trip") {
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix u = generate_gum(6, 1000 + trial);
        REQUIRE(is_gum(u).ok);
        const auto perm = gum_to_nbf_permutation(u);
        CHECK(is_nbf(permute_similar(u, perm)));
    }
    CHECK_THROWS_AS(gum_to_nbf_permutation(non_gum_example()), NotGum);
    // an already nested input stays nested under the returned ordering
    const Matrix nbf{{5, 3, 1, 1}, {4, 5, 1, 1}, {2, 2, 5, 2.5}, {2, 2, 3, 5}};
    CHECK(is_nbf(permute_similar(nbf, gum_to_nbf_permutation(nbf))));
}

TEST_CASE("swap of the two lead indices repairs a displaced block") {
    // lead block out of order: rows/cols 1 and 2 must swap to nest
    const Matrix u{{3, 1, 1}, {2, 4, 1}, {2, 2.5, 5}};
    REQUIRE(is_gum(u).ok);
    const auto perm = gum_to_nbf_permutation(u);
    CHECK(is_nbf(permute_similar(u, perm)));
}

TEST_CASE("combinatorial nonsingularity criterion") {
    CHECK(gum_nonsingular(Matrix::identity(3)));
    CHECK_FALSE(gum_nonsingular(Matrix{{1, 1}, {1, 1}}));   // duplicated rows
    CHECK_FALSE(gum_nonsingular(Matrix{{0, 0}, {0, 1}}));   // zero row
    CHECK_THROWS_AS(gum_nonsingular(non_gum_example()), NotGum);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix u = generate_gum(2 + trial % 6, 500 + trial);
        CHECK(gum_nonsingular(u) == !is_singular(u));
    }
}

TEST_CASE("ultrametric implies doubly dominant potential") {
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix u = generate_gum(2 + trial % 5, 900 + trial);
        if (gum_nonsingular(u)) CHECK(is_bipotential(u).ok);
    }
}

TEST_CASE("increasing block form search") {
    CHECK(is_increasing_cbf_permutation(Matrix{{7.0}}).status == Trilean::yes);
    // no ordering works for this 3x3
    const Matrix stuck{{2, 2, 2}, {2, 2, 1}, {2, 1, 2}};
    CHECK(is_increasing_cbf_permutation(stuck).status == Trilean::no);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix u = generate_gum(5, 300 + trial);
        CHECK(is_increasing_cbf_permutation(u).status == Trilean::yes);
    }
}

TEST_CASE("generator is deterministic and post-verified") {
    const Matrix a = generate_gum(6, 42);
    const Matrix b = generate_gum(6, 42);
    CHECK(max_norm_diff(a, b) == 0.0);
    const Matrix c = generate_gum(6, 43);
    CHECK(max_norm_diff(a, c) > 0.0);
    CHECK(generate_gum(1, 7).size() == 1);
    CHECK(generate_gum(1, 7)(0, 0) >= 0.0);
}

TEST_CASE("stability of the triple test under nondecreasing functions") {
    for (int trial = 0; trial < 15; ++trial) {
        const Matrix u = generate_gum(2 + trial % 5, 80 + trial);
        CHECK(is_gum(apply(fn_power(2.0), u)).ok);
        CHECK(is_gum(u.transpose()).ok);
    }
}

TEST_CASE("witness search on matrices outside the ultrametric class") {
    const std::vector<double> grid{0.5, 1.0, 10.0, 100.0, 1000.0, 1e4, 1e5};
    // dominance failure: the identity function with large t already works
    const auto w1 = contrapositive_search(Matrix{{1, 0}, {2, 1}}, grid);
    REQUIRE(w1.has_value());
    // three-index instance with a displaced large entry
    const Matrix m{{4, 2, 1}, {2, 2, 1}, {4, 2, 4}};
    REQUIRE_FALSE(is_gum(m).ok);
    CHECK(contrapositive_search(m, grid).has_value());
    // inputs inside the class are refused
    CHECK_THROWS_AS(contrapositive_search(Matrix::identity(3), grid), PreconditionFailed);
    CHECK_THROWS_AS(contrapositive_search(Matrix{{1, -1}, {0, 1}}, grid), PreconditionFailed);
}

TEST_CASE("aggregate report wiring") {
    const Matrix u = generate_gum(5, 11);
    const StructureReport rep = structure_report(u);
    CHECK(rep.gum.ok);
    CHECK(rep.is_entrywise_diag_dominant);
    CHECK(rep.nbf_permutation.has_value());
    CHECK(rep.gum_nonsingular.has_value());
    const StructureReport bad = structure_report(non_gum_example());
    CHECK_FALSE(bad.gum.ok);
    CHECK_FALSE(bad.nbf_permutation.has_value());
}
