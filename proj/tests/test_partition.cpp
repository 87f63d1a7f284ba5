#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hadamat/partition.hpp"
#include "hadamat/errors.hpp"

using namespace hadamat;

TEST_CASE("partition construction and validation") {
    const Partition p(3, {{0, 1}, {2}});
    CHECK(p.atom_of(0) == p.atom_of(1));
    CHECK(p.atom_of(2) != p.atom_of(0));
    CHECK(p.same_atom(0, 1));
    CHECK_FALSE(p.same_atom(1, 2));
    CHECK_THROWS_AS(Partition(3, {{0, 1}}), PreconditionFailed);          // not covering
    CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), PreconditionFailed);  // overlap
    CHECK_THROWS_AS(Partition(3, {{0, 1}, {2}, {}}), PreconditionFailed); // empty atom
    CHECK(Partition::trivial(4).is_trivial());
    CHECK(Partition::discrete(4).is_discrete());
}

TEST_CASE("incidence matrices") {
    const Matrix f = incidence_matrix(Partition(3, {{0, 1}, {2}}));
    const Matrix expected{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}};
    CHECK(max_norm_diff(f, expected) == 0.0);
    CHECK(max_norm_diff(incidence_matrix(Partition::discrete(3)), Matrix::identity(3)) == 0.0);
    CHECK(max_norm_diff(incidence_matrix(Partition::trivial(3)), Matrix(3, 1.0)) == 0.0);
}

TEST_CASE("conditional expectation is an averaging projection") {
    const Partition p(3, {{0, 1}, {2}});
    const Matrix e = conditional_expectation(p);
    const Matrix expected{{0.5, 0.5, 0}, {0.5, 0.5, 0}, {0, 0, 1}};
    CHECK(max_norm_diff(e, expected) == 0.0);
    CHECK(max_norm_diff(e * e, e) < 1e-12);          // idempotent
    CHECK(max_norm_diff(e.transpose(), e) < 1e-12);  // symmetric
    const Vector e1 = e * ones(3);
    for (double x : e1) CHECK(x == doctest::Approx(1.0));  // stochastic
    // fixes measurable vectors
    const Vector v{2.0, 2.0, 5.0};
    CHECK(is_measurable(v, p));
    const Vector ev = expect(p, v);
    for (std::size_t i = 0; i < 3; ++i) CHECK(ev[i] == v[i]);
    CHECK_FALSE(is_measurable(Vector{1.0, 2.0, 3.0}, p));
}

TEST_CASE("refinement and incidence commutation") {
    const Partition coarse = Partition::trivial(4);
    const Partition mid(4, {{0, 1}, {2, 3}});
    const Partition fine = Partition::discrete(4);
    CHECK(refines(coarse, mid));
    CHECK(refines(mid, fine));
    CHECK_FALSE(refines(mid, coarse));
    // F(R) F(Q) = F(R) D_w for R coarser than Q, w the atom sizes of Q
    const Matrix lhs = incidence_matrix(coarse) * incidence_matrix(mid);
    const Matrix rhs = incidence_matrix(coarse) * diagonal(mid.atom_sizes());
    CHECK(max_norm_diff(lhs, rhs) == 0.0);
}

TEST_CASE("filtration flags") {
    Filtration f;
    f.partitions = {Partition::trivial(4), Partition(4, {{0, 1}, {2, 3}}), Partition::discrete(4)};
    CHECK(f.is_valid());
    CHECK(f.is_strict());
    CHECK(f.is_dyadic());

    Filtration wide = f;
    wide.partitions.insert(wide.partitions.begin() + 1, Partition::trivial(4));
    CHECK(wide.is_valid());
    CHECK_FALSE(wide.is_strict());

    Filtration triadic;
    triadic.partitions = {Partition::trivial(3), Partition::discrete(3)};
    CHECK(triadic.is_valid());
    CHECK_FALSE(triadic.is_dyadic());   // one atom splits into three

    Filtration bad;
    bad.partitions = {Partition::discrete(3), Partition::trivial(3)};
    CHECK_FALSE(bad.is_valid());
}

TEST_CASE("atom sizes vector") {
    const Partition p(4, {{0, 2}, {1}, {3}});
    const Vector w = p.atom_sizes();
    CHECK(w == Vector{2, 1, 2, 1});
}
