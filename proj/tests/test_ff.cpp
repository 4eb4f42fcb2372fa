#include "doctest.h"

#include "detmor/ff.hpp"

using namespace detmor;

TEST_CASE("primality and inverses") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(5));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(6));
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u})
        for (uint32_t a = 1; a < p; ++a)
            CHECK((uint64_t)a * fp_inv(a, p) % p == 1);
    CHECK_THROWS_AS(fp_inv(0, 5), std::domain_error);
}

TEST_CASE("rref of a frozen matrix") {
    // [[1,2],[2,4]] over F_5 has rank 1 with pivot in column 0
    FFMatrix m = FFMatrix::from_rows(5, 2, {{1, 2}, {2, 4}});
    auto r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<size_t>{0});
    CHECK(r.mat.row(0) == FFVec{1, 2});
    CHECK(r.mat.row(1) == FFVec{0, 0});
    CHECK(rref(r.mat).mat == r.mat);
}

TEST_CASE("solve against exhaustive enumeration over F_2") {
    // every consistent 2x2 system found by brute force must be solved
    for (uint32_t bits = 0; bits < 16; ++bits) {
        FFMatrix m(2, 2, 2);
        m.set(0, 0, bits & 1);
        m.set(0, 1, (bits >> 1) & 1);
        m.set(1, 0, (bits >> 2) & 1);
        m.set(1, 1, (bits >> 3) & 1);
        for (uint32_t bv = 0; bv < 4; ++bv) {
            FFVec b{bv & 1, (bv >> 1) & 1};
            bool consistent = false;
            for (uint32_t xv = 0; xv < 4; ++xv) {
                FFVec x{xv & 1, (xv >> 1) & 1};
                if (m.apply(x) == b) consistent = true;
            }
            auto sol = solve(m, b);
            CHECK(sol.has_value() == consistent);
            if (sol) CHECK(m.apply(*sol) == b);
        }
    }
}

TEST_CASE("rank-nullity and image/kernel duality") {
    FFMatrix m = FFMatrix::from_rows(3, 3, {{1, 0, 2}, {0, 1, 1}, {1, 1, 0}});
    auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(image_basis(m).dim() == 2);
    Subspace k = kernel_basis(m);
    CHECK(k.dim() == 1);
    for (size_t i = 0; i < k.dim(); ++i) {
        FFVec v = k.basis().row(i);
        FFVec mv = m.apply(v);
        for (uint32_t x : mv) CHECK(x == 0);
    }
}

TEST_CASE("subspace lattice operations") {
    // two planes in F_2^3 intersect in a line
    Subspace a = Subspace::from_spanning_rows(
        FFMatrix::from_rows(2, 3, {{1, 0, 0}, {0, 1, 0}}));
    Subspace b = Subspace::from_spanning_rows(
        FFMatrix::from_rows(2, 3, {{0, 1, 0}, {0, 0, 1}}));
    CHECK(a.sum(b).dim() == 3);
    Subspace meet = a.intersect(b);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains({0, 1, 0}));
    CHECK(meet.is_subset_of(a));
    CHECK(meet.is_subset_of(b));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK(a == a);
}

TEST_CASE("quotient maps kill the subspace and split") {
    Subspace w = Subspace::from_spanning_rows(
        FFMatrix::from_rows(3, 3, {{1, 2, 0}}));
    auto qm = quotient_maps(w);
    CHECK(qm.q.rows() == 2);
    // q vanishes on W
    FFVec image = qm.q.apply({1, 2, 0});
    for (uint32_t x : image) CHECK(x == 0);
    CHECK((qm.q * qm.s).is_identity());
}

TEST_CASE("matrix inverse and powers") {
    FFMatrix m = FFMatrix::from_rows(5, 2, {{1, 1}, {0, 1}});
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());
    CHECK(m.pow(5) == FFMatrix::from_rows(5, 2, {{1, 0}, {0, 1}}));
    FFMatrix sing = FFMatrix::from_rows(5, 2, {{1, 2}, {2, 4}});
    CHECK_FALSE(sing.inverse().has_value());
}

TEST_CASE("tuple odometer visits p^n states") {
    FFVec t(3, 0);
    size_t count = 1;
    while (next_tuple(t, 3)) ++count;
    CHECK(count == 27);
}

TEST_CASE("complement representatives span with the subspace") {
    Subspace s = Subspace::from_spanning_rows(
        FFMatrix::from_rows(2, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    auto reps = complement_reps(s);
    CHECK(reps.size() == 2);
    Subspace all = s;
    for (const auto& r : reps)
        all = all.sum(Subspace::from_spanning_rows(
            FFMatrix::from_rows(2, 4, {r})));
    CHECK(all.dim() == 4);
}
