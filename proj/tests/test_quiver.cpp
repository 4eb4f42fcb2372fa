#include "doctest.h"

#include "detmor/quiver.hpp"

using namespace detmor;
using namespace detmor::quiver;

namespace {

Representation p0_a2(QuiverPtr q) {
    // projective at the source vertex of 0 -> 1
    return Representation(q, 2, {1, 1}, {FFMatrix::identity(2, 1)});
}

}  // namespace

TEST_CASE("quiver validation") {
    CHECK_THROWS_AS(Quiver(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    auto q = linear_an(3);
    CHECK(q->n_vertices == 3);
    CHECK(q->arrows.size() == 2);
    CHECK(is_type_a(*q));
}

TEST_CASE("hom dimensions in the two-vertex instance") {
    auto q = linear_an(2);
    auto p0 = p0_a2(q);
    auto s1 = simple_at(q, 2, 0);
    auto s2 = simple_at(q, 2, 1);
    CHECK(hom_dim(p0, s1) == 1);
    CHECK(hom_dim(s1, p0) == 0);
    CHECK(hom_dim(s2, p0) == 1);
    CHECK(hom_dim(p0, s2) == 0);
    CHECK(hom_dim(s1, s2) == 0);
    CHECK(hom_dim(s2, s1) == 0);
    CHECK(hom_dim(p0, p0) == 1);
}

TEST_CASE("morphism constructor rejects non-commuting squares") {
    auto q = linear_an(2);
    auto p0 = p0_a2(q);
    auto s2 = simple_at(q, 2, 1);
    // the map 0 at vertex 0, 1 at vertex 1 commutes from S2 but not into it
    std::vector<FFMatrix> good = {FFMatrix(2, 1, 0), FFMatrix::identity(2, 1)};
    CHECK_NOTHROW(RepMorphism(s2, p0, good));
    std::vector<FFMatrix> bad = {FFMatrix(2, 0, 1), FFMatrix::identity(2, 1)};
    CHECK_THROWS_AS(RepMorphism(p0, s2, bad), std::invalid_argument);
}

TEST_CASE("kernel image cokernel of the projective cover map") {
    auto q = linear_an(2);
    auto p0 = p0_a2(q);
    auto s1 = simple_at(q, 2, 0);
    RepMorphism cover(p0, s1, {FFMatrix::identity(2, 1), FFMatrix(2, 0, 1)});
    CHECK(is_epi(cover));
    CHECK_FALSE(is_mono(cover));
    auto k = kernel(cover);
    CHECK(k.obj.dims == std::vector<size_t>{0, 1});  // the other simple
    CHECK(image(cover).obj.dims == std::vector<size_t>{1, 0});
    CHECK(cokernel(cover).obj.total_dim() == 0);
}

TEST_CASE("indecomposable counts match the positive-root counts") {
    CHECK(enumerate_indecomposables(linear_an(2), 2, 2).size() == 3);
    CHECK(enumerate_indecomposables(linear_an(3), 2, 3).size() == 6);
}

TEST_CASE("decomposition recovers the summands") {
    auto q = linear_an(2);
    auto p0 = p0_a2(q);
    auto s1 = simple_at(q, 2, 0);
    auto ds = direct_sum(q, 2, {p0, s1, s1});
    auto mult = decompose_multiplicities(ds.total);
    REQUIRE(mult.size() == 2);
    size_t total = 0;
    for (const auto& [rep, m] : mult) total += m * rep.total_dim();
    CHECK(total == 4);
    bool has_s1 = false;
    for (const auto& [rep, m] : mult)
        if (rep.dims == std::vector<size_t>{1, 0}) {
            has_s1 = true;
            CHECK(m == 2);
        }
    CHECK(has_s1);
    CHECK(is_indecomposable(p0));
    CHECK_FALSE(is_indecomposable(ds.total));
}

TEST_CASE("iso test distinguishes the extension from the direct sum") {
    auto q = linear_an(2);
    auto p0 = p0_a2(q);
    auto sum = direct_sum(q, 2, {simple_at(q, 2, 0), simple_at(q, 2, 1)}).total;
    CHECK(iso_test(p0, sum).status == IsoStatus::NonIso);
    // conjugate by a change of basis: still isomorphic
    auto q3 = linear_an(3);
    Representation m(q3, 3, {2, 2, 1},
                     {FFMatrix::from_rows(3, 2, {{1, 0}, {1, 1}}),
                      FFMatrix::from_rows(3, 2, {{0, 2}})});
    FFMatrix g = FFMatrix::from_rows(3, 2, {{1, 1}, {0, 1}});
    Representation m2(q3, 3, {2, 2, 1},
                      {g * m.arrow_maps[0], m.arrow_maps[1] * *g.inverse()});
    auto res = iso_test(m, m2);
    CHECK(res.status == IsoStatus::Iso);
}

TEST_CASE("direct sum round trip") {
    auto q = linear_an(2);
    auto p0 = p0_a2(q);
    auto s2 = simple_at(q, 2, 1);
    auto ds = direct_sum(q, 2, {p0, s2});
    CHECK(ds.total.total_dim() == 3);
    for (size_t i = 0; i < 2; ++i) {
        auto round = compose(ds.projections[i], ds.inclusions[i]);
        for (const auto& map : round.maps)
            CHECK((map.rows() == 0 || map.is_identity()));
    }
    auto cross = compose(ds.projections[0], ds.inclusions[1]);
    CHECK(cross.is_zero());
}

TEST_CASE("hom basis elements flatten and reassemble") {
    auto q = linear_an(2);
    auto p0 = p0_a2(q);
    auto basis = hom_basis(p0, p0);
    REQUIRE(basis.size() == 1);
    auto f = unflatten(p0, p0, basis[0].flatten());
    CHECK(f.flatten() == basis[0].flatten());
}
