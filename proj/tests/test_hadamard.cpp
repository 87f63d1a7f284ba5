#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hadamat/hadamard.hpp"
#include "hadamat/linalg.hpp"
#include "hadamat/random_gen.hpp"
#include "helpers.hpp"

using namespace hadamat;

TEST_CASE("entrywise power basics") {
    CHECK_THROWS_AS(fn_power(0.5), PreconditionFailed);
    CHECK_THROWS_AS(HadamardPower(0.9), PreconditionFailed);
    const Matrix u{{2, 1}, {1, 2}};
    const Matrix u2 = hadamard_power(u, HadamardPower(2.0));
    CHECK(u2(0, 0) == 4);
    CHECK(u2(0, 1) == 1);
    // exponent one returns the input unchanged, bit for bit
    const Matrix u1 = hadamard_power(u, HadamardPower(1.0));
    CHECK(max_norm_diff(u1, u) == 0.0);
    // zero stays zero for any exponent
    CHECK(hadamard_power(Matrix{{0, 0}, {0, 0}}, HadamardPower(3.5))(0, 1) == 0.0);
}

TEST_CASE("domain violations are rejected") {
    const Matrix neg{{1, -0.5}, {0, 1}};
    CHECK_THROWS_AS(apply(fn_power(2.0), neg), DomainViolation);
}

TEST_CASE("step function evaluation") {
    const ScalarFunction f = fn_step({1.0, 2.0}, {3.0, 5.0});
    CHECK(f.eval(0.5) == 0.0);
    CHECK(f.eval(1.0) == 3.0);
    CHECK(f.eval(1.9) == 3.0);
    CHECK(f.eval(7.0) == 5.0);
    CHECK(f.is_increasing);
    CHECK_FALSE(f.is_strictly_increasing);
    CHECK_THROWS_AS(fn_step({2.0, 1.0}, {1.0, 2.0}), PreconditionFailed);
}

TEST_CASE("3x3 walk potential under x^2 - cos x + 1") {
    const Matrix u = hadamat::testing::walk_potential();
    const Matrix fu = apply(fn_x2cos(), u);
    const Matrix inv = lu_invert(fu);
    const Matrix expected{{0.3590, -0.0975, 0.0027},
                          {-0.0975, 0.2372, -0.0975},
                          {0.0027, -0.0975, 0.3590}};
    CHECK(max_norm_diff(inv, expected) <= 5e-4);
    // the (1,3) entry is positive, so the inverse just misses being a Z-matrix
    const Verdict z = is_z_matrix(inv);
    CHECK_FALSE(z.ok);
    REQUIRE(z.where.has_value());
    CHECK(z.where->first == 1);
    CHECK(z.where->second == 3);
}

TEST_CASE("image checks for potentials under shaped functions") {
    const Matrix u = hadamat::testing::walk_potential();
    for (const ScalarFunction& f : {fn_power(2.0), fn_x2cos(), fn_expm1()}) {
        const PotentialImageReport rep = check_potential_image(u, f);
        CHECK(rep.det_positive);
        CHECK(rep.right_equilibrium_nonneg);
        CHECK(rep.m_matrix);
        CHECK(rep.all_ok());
    }
    // flat pieces disqualify the function up front
    CHECK_THROWS_AS(check_potential_image(u, fn_step({1.0}, {1.0})), PreconditionFailed);
    // non-potential input is refused
    CHECK_THROWS_AS(check_potential_image(Matrix{{0, 1}, {1, 0}}, fn_power(2.0)),
                    PreconditionFailed);
}

TEST_CASE("kernel shrinks under entrywise powers") {
    const Matrix u = hadamat::testing::walk_potential();
    for (double alpha : {1.5, 2.0, 7.0}) {
        const MarkovReport rep = check_markov_preservation(u, HadamardPower(alpha));
        CHECK(rep.q_nonnegative);
        CHECK(rep.q_row_substochastic);
        CHECK(rep.all_ok());
    }
}

TEST_CASE("reduced equilibrium system has a nonnegative solution") {
    auto rng = trial_rng(23, 5);
    const Matrix u = random_bipotential(5, rng);
    for (double alpha : {1.0, 2.0, 3.0}) {
        const GeneralEquilibriumReport rep = check_general_equilibrium(u, HadamardPower(alpha));
        CHECK(rep.eta_nonneg);
    }
}

TEST_CASE("function registry") {
    CHECK(fn_by_name("identity").eval(3.0) == 3.0);
    CHECK(fn_by_name("pow", 2.0).eval(3.0) == 9.0);
    CHECK(fn_by_name("expm1").eval(0.0) == 0.0);
    CHECK(fn_by_name("x2cos").eval(0.0) == 0.0);
    CHECK_THROWS_AS(fn_by_name("nope"), PreconditionFailed);
}
