#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "detmor/ff.hpp"

// Finite-dimensional representations of an acyclic quiver over F_p, i.e.
// modules over a finite-dimensional hereditary path algebra.

namespace detmor {
namespace quiver {

struct Quiver {
    size_t n_vertices = 0;
    std::vector<std::pair<size_t, size_t>> arrows;  // (source, target)

    Quiver() = default;
    Quiver(size_t n, std::vector<std::pair<size_t, size_t>> a);
    bool is_acyclic() const;
    bool operator==(const Quiver& o) const {
        return n_vertices == o.n_vertices && arrows == o.arrows;
    }
};

using QuiverPtr = std::shared_ptr<const Quiver>;

// A_n with linear orientation 0 -> 1 -> ... -> n-1.
QuiverPtr linear_an(size_t n);
// True when the underlying undirected graph is a simple path (type A).
bool is_type_a(const Quiver& q);

struct Representation {
    QuiverPtr q;
    uint32_t p = 2;
    std::vector<size_t> dims;            // per vertex
    std::vector<FFMatrix> arrow_maps;    // arrow a: s->t gives dims[t] x dims[s]

    Representation() = default;
    Representation(QuiverPtr quiver, uint32_t p, std::vector<size_t> dims,
                   std::vector<FFMatrix> maps);
    size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    bool operator==(const Representation& o) const;
    // (total dim, dims lexicographic, arrow entries lexicographic)
    bool canonical_less(const Representation& o) const;
};

Representation zero_representation(QuiverPtr q, uint32_t p);
Representation simple_at(QuiverPtr q, uint32_t p, size_t v);

struct RepMorphism {
    Representation source, target;
    std::vector<FFMatrix> maps;  // per vertex, dims_target[v] x dims_source[v]

    RepMorphism() = default;
    // validates shapes and the commuting squares
    RepMorphism(Representation src, Representation tgt,
                std::vector<FFMatrix> maps);
    bool is_zero() const;
    FFVec flatten() const;
};

RepMorphism identity_morphism(const Representation& m);
RepMorphism zero_morphism(const Representation& src, const Representation& tgt);
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);  // g after f
RepMorphism add(const RepMorphism& a, const RepMorphism& b);
RepMorphism scale(const RepMorphism& a, uint32_t c);
RepMorphism unflatten(const Representation& src, const Representation& tgt,
                      const FFVec& v);

// Canonical basis of Hom(M, N): the solution space of the per-arrow
// commutation constraints.
std::vector<RepMorphism> hom_basis(const Representation& m,
                                   const Representation& n);
size_t hom_dim(const Representation& m, const Representation& n);

bool is_epi(const RepMorphism& f);
bool is_mono(const RepMorphism& f);

struct SubObject {
    Representation obj;
    RepMorphism incl;
};
struct QuotObject {
    Representation obj;
    RepMorphism proj;
};

SubObject kernel(const RepMorphism& f);
SubObject image(const RepMorphism& f);
QuotObject cokernel(const RepMorphism& f);

struct DirectSum {
    Representation total;
    std::vector<RepMorphism> inclusions;
    std::vector<RepMorphism> projections;
};
DirectSum direct_sum(QuiverPtr q, uint32_t p,
                     const std::vector<Representation>& parts);

enum class IsoStatus { Iso, NonIso, Inconclusive };
struct IsoResult {
    IsoStatus status;
    std::optional<RepMorphism> iso;
};
// Search for an invertible element of Hom(M, N); exhaustive when
// p^dim Hom <= threshold, randomized otherwise (NonIso then only when
// numerical invariants already separate the objects).
IsoResult iso_test(const Representation& m, const Representation& n,
                   size_t threshold = 1 << 16);

struct Decomposition {
    std::vector<Representation> parts;  // indecomposable, with repetitions
    RepMorphism iso;                    // direct_sum(parts).total -> M
};
// Krull-Schmidt decomposition by idempotent search in End(M) (exhaustive at
// small size, Fitting splittings along random endomorphisms beyond that).
Decomposition decompose(const Representation& m, size_t threshold = 1 << 14);
bool is_indecomposable(const Representation& m, size_t threshold = 1 << 14);

// Grouped by iso-class with multiplicities, canonically ordered.
std::vector<std::pair<Representation, size_t>> decompose_multiplicities(
    const Representation& m);

// One representative per iso-class of indecomposables with total dimension
// <= bound, canonically ordered; exhaustive search over all arrow matrices.
std::vector<Representation> enumerate_indecomposables(QuiverPtr q, uint32_t p,
                                                      size_t bound,
                                                      size_t limit = 1u << 22);

}  // namespace quiver
}  // namespace detmor
