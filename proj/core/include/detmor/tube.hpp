#pragma once

#include <cstdint>
#include <vector>

#include "detmor/ff.hpp"

// The homogeneous tube: finite-dimensional F_p-spaces with a nilpotent
// endomorphism. A Hom-finite abelian category with exact Serre duality whose
// Auslander-Reiten translation is the identity; iso-classes are partitions
// (Jordan types).

namespace detmor {
namespace tube {

struct NilpotentPair {
    uint32_t p = 2;
    FFMatrix n;  // dim x dim, nilpotent

    size_t dim() const { return n.rows(); }
    bool operator==(const NilpotentPair& o) const {
        return p == o.p && n == o.n;
    }
};

struct TubeMorphism {
    NilpotentPair source, target;
    FFMatrix f;  // target.dim x source.dim, with N_target f = f N_source

    TubeMorphism() = default;
    TubeMorphism(NilpotentPair src, NilpotentPair tgt, FFMatrix m);
    bool is_zero() const { return f.is_zero(); }
};

using Partition = std::vector<size_t>;  // weakly decreasing, positive parts

// Single Jordan block J_l with N e_i = e_{i+1}, N e_l = 0 (subdiagonal 1s).
NilpotentPair jordan_block(uint32_t p, size_t l);
// Block-diagonal canonical object for a partition.
NilpotentPair jordan_object(uint32_t p, const Partition& parts);

bool is_nilpotent(const NilpotentPair& x);

struct NormalForm {
    Partition partition;
    FFMatrix basis;  // invertible P with P^{-1} N P = canonical Jordan form
};
NormalForm normal_form(const NilpotentPair& x);
Partition jordan_type(const NilpotentPair& x);  // from the rank sequence

std::vector<Partition> partitions_up_to(size_t bound);
// One canonical object per partition of each n <= bound, canonically ordered.
std::vector<NilpotentPair> enumerate_objects(uint32_t p, size_t bound);

NilpotentPair zero_object(uint32_t p);
TubeMorphism identity_morphism(const NilpotentPair& x);
TubeMorphism zero_morphism(const NilpotentPair& x, const NilpotentPair& y);
TubeMorphism compose(const TubeMorphism& g, const TubeMorphism& f);  // g after f

// Canonical basis of Hom(X, Y), the solution space of N_Y f = f N_X.
std::vector<TubeMorphism> hom_basis(const NilpotentPair& x,
                                    const NilpotentPair& y);

// The canonical surjection J_a -> J_{a-1} (e_i -> e_i, e_a -> 0) and the
// socle-side inclusion J_a -> J_{a+1} (e_i -> e_{i+1}).
TubeMorphism block_quotient(uint32_t p, size_t a);
TubeMorphism block_inclusion(uint32_t p, size_t a);

struct SubObject {
    NilpotentPair obj;
    TubeMorphism incl;  // mono obj -> ambient
};
struct QuotObject {
    NilpotentPair obj;
    TubeMorphism proj;  // epi ambient -> obj
};

SubObject kernel(const TubeMorphism& f);
SubObject image(const TubeMorphism& f);
QuotObject cokernel(const TubeMorphism& f);
bool is_epi(const TubeMorphism& f);
bool is_mono(const TubeMorphism& f);

struct DirectSum {
    NilpotentPair total;
    std::vector<TubeMorphism> inclusions;
    std::vector<TubeMorphism> projections;
};
DirectSum direct_sum(uint32_t p, const std::vector<NilpotentPair>& parts);

// Ext^1(X, Y): cokernel of the coboundary operator g -> N_Y g - g N_X on
// dim_Y x dim_X matrices. Cocycle representatives phi embed as the extension
// [[N_Y, phi], [0, N_X]].
struct TubeExt {
    NilpotentPair x, y;
    size_t dim = 0;
    std::vector<FFMatrix> cocycles;   // one representative per basis class
    Subspace coboundaries;            // in flattened dim_Y*dim_X coordinates
};
TubeExt ext1(const NilpotentPair& x, const NilpotentPair& y);

struct ShortExact {
    NilpotentPair left, middle, right;
    TubeMorphism incl;  // left -> middle
    TubeMorphism proj;  // middle -> right
};

// Extension 0 -> Y -> E -> X -> 0 attached to a cocycle phi.
ShortExact materialize(const NilpotentPair& x, const NilpotentPair& y,
                       const FFMatrix& phi);
bool is_exact(const ShortExact& s);
bool is_split(const ShortExact& s);

// trace(f . phi) for phi a cocycle of Ext^1(X, Y) and f : Y -> X; vanishes on
// coboundaries and induces a nondegenerate pairing (the tau = Id Serre form).
uint32_t serre_pairing(const FFMatrix& phi, const TubeMorphism& f);

// Cocycle of the pullback of the class phi in Ext^1(X, Y) along t : T -> X.
FFMatrix pullback_cocycle(const FFMatrix& phi, const TubeMorphism& t);
// Independent materialized pullback of a short exact sequence along t.
ShortExact pullback_extension(const ShortExact& s, const TubeMorphism& t);

// 0 -> J_l -> J_{l+1} (+) J_{l-1} -> J_l -> 0 (middle is J_2 when l = 1).
ShortExact almost_split_sequence(uint32_t p, size_t l);

// Ext^1(f, -) = 0 tested over the canonical objects of length <= bound.
bool ext_vanishing(const TubeMorphism& f, size_t bound);

}  // namespace tube
}  // namespace detmor
