#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "detmor/ff.hpp"

// The determined-morphism engine, generic over a category adapter (see
// category.hpp). For a fixed object C and target Y it studies the right
// End(C)-module Hom(C, Y), its submodule lattice, the map
// alpha -> Im Hom(C, alpha), right C-determinedness of morphisms ending at Y,
// representatives of submodules, right minimization, and the resulting
// bijection table between submodules and right equivalence classes.

namespace detmor {

// Coordinates of f in a hom basis, via flattened matrices.
template <class Cat>
FFVec coords_in_basis(const Cat& cat, const std::vector<typename Cat::Mor>& basis,
                      const typename Cat::Mor& f) {
    FFVec fv = cat.flatten(f);
    if (basis.empty()) {
        for (uint32_t x : fv)
            if (x) throw std::logic_error("coords_in_basis: not in span");
        return {};
    }
    std::vector<FFVec> cols;
    for (const auto& b : basis) cols.push_back(cat.flatten(b));
    FFMatrix sys = FFMatrix::from_cols(cat.modulus(), fv.size(), cols);
    auto sol = solve(sys, fv);
    if (!sol) throw std::logic_error("coords_in_basis: not in span");
    return *sol;
}

template <class Cat>
typename Cat::Mor lincomb(const Cat& cat, const typename Cat::Obj& src,
                          const typename Cat::Obj& tgt,
                          const std::vector<typename Cat::Mor>& basis,
                          const FFVec& c) {
    typename Cat::Mor acc = cat.zero_mor(src, tgt);
    for (size_t i = 0; i < basis.size(); ++i)
        if (c[i]) acc = cat.add(acc, cat.scale(basis[i], c[i]));
    return acc;
}

// Hom(C, Y) as a right module over End(C), acting by precomposition. The
// action matrix of g sends the coordinates of h to those of h . g.
template <class Cat>
struct GammaModule {
    typename Cat::Obj c, y;
    std::vector<typename Cat::Mor> hom_cy;  // coordinate basis of Hom(C, Y)
    std::vector<typename Cat::Mor> end_c;   // basis of End(C)
    std::vector<FFMatrix> action;           // one matrix per End(C) basis element
};

template <class Cat>
GammaModule<Cat> gamma_module(const Cat& cat, const typename Cat::Obj& c,
                              const typename Cat::Obj& y) {
    GammaModule<Cat> gm{c, y, cat.hom(c, y), cat.hom(c, c), {}};
    const uint32_t p = cat.modulus();
    for (const auto& g : gm.end_c) {
        std::vector<FFVec> cols;
        for (const auto& b : gm.hom_cy)
            cols.push_back(coords_in_basis(cat, gm.hom_cy, cat.compose(b, g)));
        gm.action.push_back(FFMatrix::from_cols(p, gm.hom_cy.size(), cols));
    }
    return gm;
}

template <class Cat>
bool is_submodule(const Cat& cat, const GammaModule<Cat>& gm, const Subspace& h) {
    for (const auto& a : gm.action) {
        std::vector<FFVec> rows;
        for (size_t i = 0; i < h.dim(); ++i) rows.push_back(a.apply(h.basis().row(i)));
        Subspace moved = Subspace::from_spanning_rows(
            FFMatrix::from_rows(cat.modulus(), h.ambient_dim(), rows));
        if (!moved.is_subset_of(h)) return false;
    }
    return true;
}

// All End(C)-submodules of Hom(C, Y): close each cyclic submodule under the
// action, then close the collection under sums. Throws when the ambient space
// has more than `limit` vectors.
template <class Cat>
std::vector<Subspace> enumerate_submodules(const Cat& cat,
                                           const GammaModule<Cat>& gm,
                                           size_t limit = 1u << 20) {
    const uint32_t p = cat.modulus();
    const size_t d = gm.hom_cy.size();
    double sz = 1;
    for (size_t i = 0; i < d; ++i) {
        sz *= p;
        if (sz > (double)limit)
            throw std::runtime_error("enumerate_submodules: ambient space too large");
    }
    auto close = [&](Subspace s) {
        for (;;) {
            Subspace next = s;
            for (const auto& a : gm.action) {
                std::vector<FFVec> rows;
                for (size_t i = 0; i < s.dim(); ++i)
                    rows.push_back(a.apply(s.basis().row(i)));
                next = next.sum(Subspace::from_spanning_rows(
                    FFMatrix::from_rows(p, d, rows)));
            }
            if (next.dim() == s.dim()) return s;
            s = next;
        }
    };
    std::set<Subspace> found;
    found.insert(Subspace(p, d));  // zero submodule
    FFVec v(d, 0);
    while (next_tuple(v, p))
        found.insert(close(Subspace::from_spanning_rows(FFMatrix::from_rows(p, d, {v}))));
    // close under joins
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Subspace> cur(found.begin(), found.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j)
                if (found.insert(cur[i].sum(cur[j])).second) grew = true;
    }
    return {found.begin(), found.end()};
}

// Im Hom(C, alpha) inside Hom(C, Y), in gm coordinates.
template <class Cat>
Subspace im_hom(const Cat& cat, const GammaModule<Cat>& gm,
                const typename Cat::Mor& alpha) {
    std::vector<FFVec> rows;
    for (const auto& phi : cat.hom(gm.c, cat.source(alpha)))
        rows.push_back(coords_in_basis(cat, gm.hom_cy, cat.compose(alpha, phi)));
    return Subspace::from_spanning_rows(
        FFMatrix::from_rows(cat.modulus(), gm.hom_cy.size(), rows));
}

// A morphism s with alpha . s = t, if one exists.
template <class Cat>
std::optional<typename Cat::Mor> factors_through(const Cat& cat,
                                                 const typename Cat::Mor& t,
                                                 const typename Cat::Mor& alpha) {
    auto basis = cat.hom(cat.source(t), cat.source(alpha));
    FFVec tv = cat.flatten(t);
    std::vector<FFVec> cols;
    for (const auto& b : basis) cols.push_back(cat.flatten(cat.compose(alpha, b)));
    FFMatrix sys = FFMatrix::from_cols(cat.modulus(), tv.size(), cols);
    auto sol = solve(sys, tv);
    if (!sol) return std::nullopt;
    return lincomb(cat, cat.source(t), cat.source(alpha), basis, *sol);
}

template <class Cat>
bool right_equivalent(const Cat& cat, const typename Cat::Mor& a,
                      const typename Cat::Mor& b) {
    return factors_through(cat, a, b).has_value() &&
           factors_through(cat, b, a).has_value();
}

// The subspace of t in Hom(T, Y) with Im Hom(C, t) contained in H, in
// Hom(T, Y) coordinates. Linear in t: for every phi : C -> T the composite
// t . phi must land in H.
template <class Cat>
Subspace cond_subspace(const Cat& cat, const GammaModule<Cat>& gm,
                       const Subspace& h, const typename Cat::Obj& t_obj,
                       const std::vector<typename Cat::Mor>& hom_ty) {
    const uint32_t p = cat.modulus();
    const size_t dt = hom_ty.size();
    Subspace ann = kernel_basis(h.basis());  // functionals vanishing on H
    std::vector<FFVec> rows;
    for (const auto& phi : cat.hom(gm.c, t_obj)) {
        std::vector<FFVec> cols;
        for (const auto& b : hom_ty)
            cols.push_back(coords_in_basis(cat, gm.hom_cy, cat.compose(b, phi)));
        FFMatrix m = FFMatrix::from_cols(p, gm.hom_cy.size(), cols);
        FFMatrix block = ann.basis() * m;
        for (size_t i = 0; i < block.rows(); ++i) rows.push_back(block.row(i));
    }
    if (rows.empty()) return Subspace::full(p, dt);
    return kernel_basis(FFMatrix::from_rows(p, dt, rows));
}

// Verdict of the right-determinedness test: quantified over the pool of
// indecomposable test objects up to the bound.
template <class Cat>
struct Verdict {
    bool holds = false;
    size_t bound = 0;
    size_t objects_checked = 0;
    std::optional<typename Cat::Mor> witness;  // t that violates factorization
};

// alpha is right C-determined iff every t : T -> Y whose image under
// Hom(C, -) lands in Im Hom(C, alpha) factors through alpha. The overload
// taking a GammaModule lets callers reuse it across many alphas.
template <class Cat>
Verdict<Cat> is_right_determined(const Cat& cat, const GammaModule<Cat>& gm,
                                 const typename Cat::Mor& alpha, size_t bound) {
    Subspace h = im_hom(cat, gm, alpha);
    Verdict<Cat> v;
    v.bound = bound;
    for (const auto& t_obj : cat.indecomposables(bound)) {
        ++v.objects_checked;
        auto hom_ty = cat.hom(t_obj, cat.target(alpha));
        Subspace cond = cond_subspace(cat, gm, h, t_obj, hom_ty);
        std::vector<FFVec> rows;
        for (const auto& psi : cat.hom(t_obj, cat.source(alpha)))
            rows.push_back(coords_in_basis(cat, hom_ty, cat.compose(alpha, psi)));
        Subspace fac = Subspace::from_spanning_rows(
            FFMatrix::from_rows(cat.modulus(), hom_ty.size(), rows));
        if (!cond.is_subset_of(fac)) {
            for (size_t i = 0; i < cond.dim(); ++i) {
                FFVec row = cond.basis().row(i);
                if (!fac.contains(row)) {
                    v.witness =
                        lincomb(cat, t_obj, cat.target(alpha), hom_ty, row);
                    break;
                }
            }
            return v;
        }
    }
    v.holds = true;
    return v;
}

template <class Cat>
Verdict<Cat> is_right_determined(const Cat& cat, const typename Cat::Mor& alpha,
                                 const typename Cat::Obj& c, size_t bound) {
    return is_right_determined(cat, gamma_module(cat, c, cat.target(alpha)),
                               alpha, bound);
}

// A morphism alpha ending at Y with Im Hom(C, alpha) = H, built from bases of
// the condition subspaces over the pool of indecomposables. Requires H to be
// an End(C)-submodule; throws if the pool bound is too small to realize H.
template <class Cat>
typename Cat::Mor represent_pair(const Cat& cat, const GammaModule<Cat>& gm,
                                 const Subspace& h, size_t pool_bound) {
    if (!is_submodule(cat, gm, h))
        throw std::invalid_argument("represent_pair: H is not a submodule");
    std::vector<typename Cat::Obj> sources;
    std::vector<typename Cat::Mor> comps;
    for (const auto& t_obj : cat.indecomposables(pool_bound)) {
        auto hom_ty = cat.hom(t_obj, gm.y);
        Subspace g = cond_subspace(cat, gm, h, t_obj, hom_ty);
        for (size_t i = 0; i < g.dim(); ++i) {
            comps.push_back(lincomb(cat, t_obj, gm.y, hom_ty, g.basis().row(i)));
            sources.push_back(t_obj);
        }
    }
    typename Cat::Mor alpha = cat.zero_mor(cat.zero_obj(), gm.y);
    if (!sources.empty()) {
        auto ds = cat.direct_sum(sources);
        alpha = cat.zero_mor(ds.total, gm.y);
        for (size_t i = 0; i < comps.size(); ++i)
            alpha = cat.add(alpha, cat.compose(comps[i], ds.projections[i]));
    }
    if (!(im_hom(cat, gm, alpha) == h))
        throw std::runtime_error(
            "represent_pair: pool bound too small to realize the submodule");
    return alpha;
}

template <class Cat>
struct Minimized {
    typename Cat::Mor morphism;
    bool certified = true;  // right minimality certified, not just sampled
    size_t dropped = 0;     // total dimension removed from the source
};

// Right minimization: greedily drop indecomposable summands of the source
// while staying right equivalent, then certify by searching the endomorphisms
// phi with alpha . phi = alpha for a non-invertible element (Fitting split
// when found; sampling only when the search space is too large to exhaust).
template <class Cat>
Minimized<Cat> right_minimize(const Cat& cat, typename Cat::Mor alpha,
                              size_t limit = 1u << 16) {
    const uint32_t p = cat.modulus();
    Minimized<Cat> out{alpha, true, 0};
    for (bool changed = true; changed;) {
        changed = false;
        // greedy summand dropping
        for (bool dropped = true; dropped;) {
            dropped = false;
            if (cat.obj_dim(cat.source(out.morphism)) == 0) break;
            auto dec = cat.decompose(cat.source(out.morphism));
            auto ds = cat.direct_sum(dec.parts);
            auto tilde = cat.compose(out.morphism, dec.iso);
            for (size_t skip = 0; skip < dec.parts.size(); ++skip) {
                std::vector<typename Cat::Obj> rest;
                for (size_t i = 0; i < dec.parts.size(); ++i)
                    if (i != skip) rest.push_back(dec.parts[i]);
                typename Cat::Mor beta = cat.zero_mor(cat.zero_obj(), cat.target(alpha));
                if (!rest.empty()) {
                    auto sub = cat.direct_sum(rest);
                    auto embed = cat.zero_mor(sub.total, ds.total);
                    size_t k = 0;
                    for (size_t i = 0; i < dec.parts.size(); ++i) {
                        if (i == skip) continue;
                        embed = cat.add(embed, cat.compose(ds.inclusions[i],
                                                           sub.projections[k]));
                        ++k;
                    }
                    beta = cat.compose(tilde, embed);
                }
                if (factors_through(cat, out.morphism, beta)) {
                    out.dropped += cat.obj_dim(dec.parts[skip]);
                    out.morphism = beta;
                    dropped = true;
                    break;
                }
            }
        }
        // certify: solve alpha . e = 0 in End(source), inspect phi = id + e
        auto x = cat.source(out.morphism);
        auto endb = cat.hom(x, x);
        FFVec zero_target(cat.flatten(out.morphism).size(), 0);
        std::vector<FFVec> cols;
        for (const auto& e : endb)
            cols.push_back(cat.flatten(cat.compose(out.morphism, e)));
        Subspace ker = kernel_basis(
            FFMatrix::from_cols(p, zero_target.size(), cols));
        auto inspect = [&](const FFVec& c) -> bool {
            typename Cat::Mor phi = cat.identity(x);
            for (size_t i = 0; i < endb.size(); ++i)
                if (c[i]) phi = cat.add(phi, cat.scale(endb[i], c[i]));
            if (cat.is_mono(phi) && cat.is_epi(phi)) return false;
            // Fitting: alpha factors through its restriction to im(phi^n)
            typename Cat::Mor pw = phi;
            for (size_t i = 0; i < cat.obj_dim(x); ++i) pw = cat.compose(phi, pw);
            auto im = cat.image(pw);
            out.dropped += cat.obj_dim(x) - cat.obj_dim(im.obj);
            out.morphism = cat.compose(out.morphism, im.mor);
            return true;
        };
        double sz = 1;
        bool exhaustible = true;
        for (size_t i = 0; i < ker.dim(); ++i) {
            sz *= p;
            if (sz > (double)limit) exhaustible = false;
        }
        if (exhaustible) {
            FFVec t(ker.dim(), 0);
            while (next_tuple(t, p)) {
                FFVec c = ker.basis().transpose().apply(t);
                if (inspect(c)) {
                    changed = true;
                    break;
                }
            }
        } else {
            std::mt19937_64 rng(0xD473C0DE);
            std::uniform_int_distribution<uint32_t> dist(0, p - 1);
            bool hit = false;
            for (size_t trial = 0; trial < 64 && !hit; ++trial) {
                FFVec t(ker.dim());
                for (auto& v : t) v = dist(rng);
                FFVec c = ker.basis().transpose().apply(t);
                if (inspect(c)) hit = changed = true;
            }
            if (!hit) out.certified = false;
        }
    }
    return out;
}

// One row per End(C)-submodule of Hom(C, Y): the submodule and a minimized
// morphism representing it.
template <class Cat>
struct TableRow {
    Subspace h;
    typename Cat::Mor rep;
    bool certified = true;
};

template <class Cat>
struct BijectionTable {
    GammaModule<Cat> gm;
    std::vector<TableRow<Cat>> rows;
    bool distinct_classes = true;  // pairwise non-right-equivalent reps
};

template <class Cat>
BijectionTable<Cat> auslander_table(const Cat& cat, const typename Cat::Obj& c,
                                    const typename Cat::Obj& y, size_t pool_bound,
                                    size_t submodule_limit = 1u << 20) {
    BijectionTable<Cat> table{gamma_module(cat, c, y), {}, true};
    auto subs = enumerate_submodules(cat, table.gm, submodule_limit);
    std::sort(subs.begin(), subs.end());
    for (const auto& h : subs) {
        auto alpha = represent_pair(cat, table.gm, h, pool_bound);
        auto min = right_minimize(cat, alpha);
        if (!(im_hom(cat, table.gm, min.morphism) == h))
            throw std::logic_error("auslander_table: minimization changed the image");
        table.rows.push_back({h, min.morphism, min.certified});
    }
    for (size_t i = 0; i < table.rows.size(); ++i)
        for (size_t j = i + 1; j < table.rows.size(); ++j)
            if (right_equivalent(cat, table.rows[i].rep, table.rows[j].rep))
                table.distinct_classes = false;
    return table;
}

}  // namespace detmor
