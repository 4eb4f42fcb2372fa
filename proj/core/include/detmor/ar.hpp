#pragma once

#include <cstdint>
#include <vector>

#include "detmor/ff.hpp"
#include "detmor/quiver.hpp"

// Auslander-Reiten constructions over the path algebra of an acyclic quiver:
// simples, projectives, injectives, minimal projective presentations, the
// translate tau = DTr realized through the Nakayama functor, Ext^1 via
// presentations, and almost split sequences.

namespace detmor {
namespace ar {

using quiver::QuiverPtr;
using quiver::Representation;
using quiver::RepMorphism;

// All paths of the acyclic quiver, grouped by endpoints, ordered by
// (length, lexicographic arrow sequence). Index 0 at (v, v) is the trivial
// path.
struct PathTable {
    QuiverPtr q;
    // paths[from][to] = list of arrow index sequences
    std::vector<std::vector<std::vector<std::vector<size_t>>>> paths;

    explicit PathTable(QuiverPtr q);
    size_t count(size_t from, size_t to) const { return paths[from][to].size(); }
    size_t index_of(size_t from, size_t to, const std::vector<size_t>& p) const;
};

std::vector<Representation> simples(QuiverPtr q, uint32_t p);
// Indecomposable projective P(v): basis at u = paths v -> u.
std::vector<Representation> projectives(QuiverPtr q, uint32_t p);
// Indecomposable injective I(v): basis at u = paths u -> v.
std::vector<Representation> injectives(QuiverPtr q, uint32_t p);

Representation projective_at(QuiverPtr q, uint32_t p, size_t v);
Representation injective_at(QuiverPtr q, uint32_t p, size_t v);

bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

// Minimal projective presentation P1 --d--> P0 --cover--> M -> 0 with the
// summand vertices of P0 and P1 recorded.
struct ProjectivePresentation {
    Representation m;
    Representation p0, p1;
    std::vector<size_t> p0_vertices, p1_vertices;
    RepMorphism d;      // P1 -> P0
    RepMorphism cover;  // P0 -> M, epi inducing an iso on tops
};
ProjectivePresentation projective_cover(const Representation& m);

// Minimal injective copresentation 0 -> M -> I0 --w--> I1.
struct InjectiveCopresentation {
    Representation m;
    Representation i0, i1;
    std::vector<size_t> i0_vertices, i1_vertices;
    RepMorphism embed;  // M -> I0, mono inducing an iso on socles
    RepMorphism w;      // I0 -> I1
};
InjectiveCopresentation injective_envelope(const Representation& m);

// tau(M) = Ker(nu(d)) for the Nakayama functor nu: P(v) -> I(v); zero on
// projectives. tau_inverse is the dual construction; zero on injectives.
Representation tau(const Representation& m);
Representation tau_inverse(const Representation& m);

// Ext^1(X, Y) = coker(Hom(P0, Y) -> Hom(P1, Y)) from a minimal presentation
// of X; cocycle representatives are morphisms P1 -> Y.
struct ExtSpace {
    Representation x, y;
    size_t dim = 0;
    ProjectivePresentation pres;
    std::vector<RepMorphism> cocycles;   // class representatives P1 -> Y
    Subspace coboundaries;               // image of Hom(P0,Y) in Hom(P1,Y) coords
    std::vector<RepMorphism> hom_p1_y;   // coordinate basis
};
ExtSpace ext1(const Representation& x, const Representation& y);

struct ShortExact {
    Representation left, middle, right;
    RepMorphism incl;  // left -> middle
    RepMorphism proj;  // middle -> right
};
// Pushout of the presentation differential along a cocycle P1 -> Y:
// 0 -> Y -> E -> X -> 0.
ShortExact materialize(const ExtSpace& ext, const RepMorphism& cocycle);
bool is_exact(const ShortExact& s);
bool is_split(const ShortExact& s);

// Basis of rad End(Y) = the non-invertible endomorphisms, as a subspace in
// End(Y) coordinates. Requires End(Y) local (Y indecomposable).
Subspace rad_end(const Representation& y, size_t limit = 1 << 16);

struct AlmostSplitCheck {
    bool ok = false;
    std::string reason;
    size_t objects_checked = 0;
    size_t morphisms_checked = 0;
};
AlmostSplitCheck almost_split_check(const ShortExact& s, size_t test_bound);

// The almost split sequence 0 -> tau Y -> E -> Y -> 0, built by representing
// the pair (Y, rad End Y) and right-minimizing. Y must be indecomposable
// non-projective.
ShortExact almost_split_ending_at(const Representation& y, size_t pool_bound);

// Ext^1(f, -) = 0 over the indecomposables of total dimension <= test_bound.
bool projectively_trivial_check(const RepMorphism& f, size_t test_bound);

}  // namespace ar
}  // namespace detmor
