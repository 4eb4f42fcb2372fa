#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "detmor/ff.hpp"
#include "detmor/quiver.hpp"
#include "detmor/tube.hpp"

// Uniform category interfaces consumed by the generic determined-morphism
// engine. Each adapter exposes objects, morphisms, hom bases, (co)kernels,
// direct sums, Krull-Schmidt decompositions and a pool of indecomposables.
// OpCat reverses a base category, turning right-hand notions into left-hand
// ones.

namespace detmor {

struct QuiverCat {
    using Obj = quiver::Representation;
    using Mor = quiver::RepMorphism;

    quiver::QuiverPtr q;
    uint32_t p = 2;

    uint32_t modulus() const { return p; }
    Obj zero_obj() const { return quiver::zero_representation(q, p); }

    std::vector<Mor> hom(const Obj& x, const Obj& y) const {
        return quiver::hom_basis(x, y);
    }
    Mor compose(const Mor& g, const Mor& f) const { return quiver::compose(g, f); }
    Mor identity(const Obj& x) const { return quiver::identity_morphism(x); }
    Mor zero_mor(const Obj& x, const Obj& y) const {
        return quiver::zero_morphism(x, y);
    }
    Mor add(const Mor& a, const Mor& b) const { return quiver::add(a, b); }
    Mor scale(const Mor& a, uint32_t c) const { return quiver::scale(a, c); }
    FFVec flatten(const Mor& f) const { return f.flatten(); }
    Obj source(const Mor& f) const { return f.source; }
    Obj target(const Mor& f) const { return f.target; }
    bool is_epi(const Mor& f) const { return quiver::is_epi(f); }
    bool is_mono(const Mor& f) const { return quiver::is_mono(f); }

    struct Piece {
        Obj obj;
        Mor mor;
    };
    Piece kernel(const Mor& f) const {
        auto k = quiver::kernel(f);
        return {k.obj, k.incl};
    }
    Piece cokernel(const Mor& f) const {
        auto c = quiver::cokernel(f);
        return {c.obj, c.proj};
    }
    Piece image(const Mor& f) const {
        auto i = quiver::image(f);
        return {i.obj, i.incl};
    }

    struct Sum {
        Obj total;
        std::vector<Mor> inclusions, projections;
    };
    Sum direct_sum(const std::vector<Obj>& parts) const {
        auto ds = quiver::direct_sum(q, p, parts);
        return {ds.total, ds.inclusions, ds.projections};
    }

    struct Decomp {
        std::vector<Obj> parts;
        Mor iso;  // direct_sum(parts).total -> x
    };
    Decomp decompose(const Obj& x) const {
        auto d = quiver::decompose(x);
        return {d.parts, d.iso};
    }

    Mor invert(const Mor& f) const {
        std::vector<FFMatrix> maps;
        for (const auto& m : f.maps) {
            auto inv = m.inverse();
            if (!inv) throw std::invalid_argument("invert: morphism is not an iso");
            maps.push_back(*inv);
        }
        return Mor(f.target, f.source, maps);
    }

    std::vector<Obj> indecomposables(size_t bound) const {
        return quiver::enumerate_indecomposables(q, p, bound);
    }

    bool obj_equal(const Obj& a, const Obj& b) const { return a == b; }
    size_t obj_dim(const Obj& x) const { return x.total_dim(); }
    std::string label(const Obj& x) const {
        std::ostringstream os;
        os << "dim[";
        for (size_t v = 0; v < x.dims.size(); ++v)
            os << (v ? "," : "") << x.dims[v];
        os << "]";
        return os.str();
    }
};

struct TubeCat {
    using Obj = tube::NilpotentPair;
    using Mor = tube::TubeMorphism;

    uint32_t p = 2;

    uint32_t modulus() const { return p; }
    Obj zero_obj() const { return tube::zero_object(p); }

    std::vector<Mor> hom(const Obj& x, const Obj& y) const {
        return tube::hom_basis(x, y);
    }
    Mor compose(const Mor& g, const Mor& f) const { return tube::compose(g, f); }
    Mor identity(const Obj& x) const { return tube::identity_morphism(x); }
    Mor zero_mor(const Obj& x, const Obj& y) const {
        return tube::zero_morphism(x, y);
    }
    Mor add(const Mor& a, const Mor& b) const {
        return Mor(a.source, a.target, a.f + b.f);
    }
    Mor scale(const Mor& a, uint32_t c) const {
        return Mor(a.source, a.target, a.f.scaled(c));
    }
    FFVec flatten(const Mor& f) const {
        FFVec v;
        for (size_t i = 0; i < f.f.rows(); ++i)
            for (size_t j = 0; j < f.f.cols(); ++j) v.push_back(f.f.at(i, j));
        return v;
    }
    Obj source(const Mor& f) const { return f.source; }
    Obj target(const Mor& f) const { return f.target; }
    bool is_epi(const Mor& f) const { return tube::is_epi(f); }
    bool is_mono(const Mor& f) const { return tube::is_mono(f); }

    struct Piece {
        Obj obj;
        Mor mor;
    };
    Piece kernel(const Mor& f) const {
        auto k = tube::kernel(f);
        return {k.obj, k.incl};
    }
    Piece cokernel(const Mor& f) const {
        auto c = tube::cokernel(f);
        return {c.obj, c.proj};
    }
    Piece image(const Mor& f) const {
        auto i = tube::image(f);
        return {i.obj, i.incl};
    }

    struct Sum {
        Obj total;
        std::vector<Mor> inclusions, projections;
    };
    Sum direct_sum(const std::vector<Obj>& parts) const {
        auto ds = tube::direct_sum(p, parts);
        return {ds.total, ds.inclusions, ds.projections};
    }

    struct Decomp {
        std::vector<Obj> parts;
        Mor iso;
    };
    Decomp decompose(const Obj& x) const {
        auto nf = tube::normal_form(x);
        std::vector<Obj> parts;
        for (size_t l : nf.partition) parts.push_back(tube::jordan_block(p, l));
        Mor iso(tube::jordan_object(p, nf.partition), x, nf.basis);
        return {parts, iso};
    }

    Mor invert(const Mor& f) const {
        auto inv = f.f.inverse();
        if (!inv) throw std::invalid_argument("invert: morphism is not an iso");
        return Mor(f.target, f.source, *inv);
    }

    std::vector<Obj> indecomposables(size_t bound) const {
        std::vector<Obj> out;
        for (size_t l = 1; l <= bound; ++l) out.push_back(tube::jordan_block(p, l));
        return out;
    }

    bool obj_equal(const Obj& a, const Obj& b) const { return a == b; }
    size_t obj_dim(const Obj& x) const { return x.dim(); }
    std::string label(const Obj& x) const {
        auto parts = tube::jordan_type(x);
        std::ostringstream os;
        os << "J[";
        for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
        os << "]";
        return os.str();
    }
};

// The opposite category: morphisms keep their underlying data but swap ends,
// composition reverses, kernels and cokernels trade places, epis become
// monos. Running the right-determined engine over OpCat answers the
// left-determined questions for the base category.
template <class Base>
struct OpCat {
    Base base;

    using Obj = typename Base::Obj;
    struct Mor {
        typename Base::Mor m;
    };

    uint32_t modulus() const { return base.modulus(); }
    Obj zero_obj() const { return base.zero_obj(); }

    std::vector<Mor> hom(const Obj& x, const Obj& y) const {
        std::vector<Mor> out;
        for (auto& f : base.hom(y, x)) out.push_back({f});
        return out;
    }
    Mor compose(const Mor& g, const Mor& f) const {
        return {base.compose(f.m, g.m)};
    }
    Mor identity(const Obj& x) const { return {base.identity(x)}; }
    Mor zero_mor(const Obj& x, const Obj& y) const {
        return {base.zero_mor(y, x)};
    }
    Mor add(const Mor& a, const Mor& b) const { return {base.add(a.m, b.m)}; }
    Mor scale(const Mor& a, uint32_t c) const { return {base.scale(a.m, c)}; }
    FFVec flatten(const Mor& f) const { return base.flatten(f.m); }
    Obj source(const Mor& f) const { return base.target(f.m); }
    Obj target(const Mor& f) const { return base.source(f.m); }
    bool is_epi(const Mor& f) const { return base.is_mono(f.m); }
    bool is_mono(const Mor& f) const { return base.is_epi(f.m); }

    struct Piece {
        Obj obj;
        Mor mor;
    };
    Piece kernel(const Mor& f) const {
        auto c = base.cokernel(f.m);
        return {c.obj, {c.mor}};
    }
    Piece cokernel(const Mor& f) const {
        auto k = base.kernel(f.m);
        return {k.obj, {k.mor}};
    }
    Piece image(const Mor& f) const {
        // the op-image is the base coimage: quotient by the base kernel
        auto k = base.kernel(f.m);
        auto c = base.cokernel(k.mor);
        return {c.obj, {c.mor}};
    }

    struct Sum {
        Obj total;
        std::vector<Mor> inclusions, projections;
    };
    Sum direct_sum(const std::vector<Obj>& parts) const {
        auto ds = base.direct_sum(parts);
        Sum out;
        out.total = ds.total;
        for (auto& f : ds.projections) out.inclusions.push_back({f});
        for (auto& f : ds.inclusions) out.projections.push_back({f});
        return out;
    }

    struct Decomp {
        std::vector<Obj> parts;
        Mor iso;
    };
    Decomp decompose(const Obj& x) const {
        auto d = base.decompose(x);
        return {d.parts, {base.invert(d.iso)}};
    }

    Mor invert(const Mor& f) const { return {base.invert(f.m)}; }

    std::vector<Obj> indecomposables(size_t bound) const {
        return base.indecomposables(bound);
    }

    bool obj_equal(const Obj& a, const Obj& b) const {
        return base.obj_equal(a, b);
    }
    size_t obj_dim(const Obj& x) const { return base.obj_dim(x); }
    std::string label(const Obj& x) const { return base.label(x); }
};

}  // namespace detmor
