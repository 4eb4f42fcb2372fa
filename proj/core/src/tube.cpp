#include "detmor/tube.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace detmor {
namespace tube {

TubeMorphism::TubeMorphism(NilpotentPair src, NilpotentPair tgt, FFMatrix m)
    : source(std::move(src)), target(std::move(tgt)), f(std::move(m)) {
    if (f.rows() != target.dim() || f.cols() != source.dim())
        throw std::invalid_argument("TubeMorphism: shape mismatch");
    if (source.p != target.p || f.modulus() != source.p)
        throw std::invalid_argument("TubeMorphism: modulus mismatch");
    if (target.n * f != f * source.n)
        throw std::invalid_argument("TubeMorphism: intertwining relation fails");
}

NilpotentPair jordan_block(uint32_t p, size_t l) {
    FFMatrix n(p, l, l);
    for (size_t i = 0; i + 1 < l; ++i) n.set(i + 1, i, 1);
    return {p, n};
}

NilpotentPair jordan_object(uint32_t p, const Partition& parts) {
    size_t d = 0;
    for (size_t x : parts) d += x;
    FFMatrix n(p, d, d);
    size_t off = 0;
    for (size_t l : parts) {
        for (size_t i = 0; i + 1 < l; ++i) n.set(off + i + 1, off + i, 1);
        off += l;
    }
    return {p, n};
}

bool is_nilpotent(const NilpotentPair& x) {
    return x.n.pow(x.dim()).is_zero();
}

Partition jordan_type(const NilpotentPair& x) {
    if (!is_nilpotent(x))
        throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    size_t d = x.dim();
    // rank(N^0), rank(N^1), ...
    std::vector<size_t> rk(d + 2, 0);
    FFMatrix power = FFMatrix::identity(x.p, d);
    for (size_t i = 0; i <= d; ++i) {
        rk[i] = rref(power).rank;
        power = power * x.n;
    }
    // number of parts >= i equals rank(N^{i-1}) - rank(N^i)
    Partition parts;
    for (size_t i = 1; i <= d; ++i) {
        size_t mult_ge_i = rk[i - 1] - rk[i];
        size_t mult_ge_next = (i < d) ? rk[i] - rk[i + 1] : 0;
        size_t exact = mult_ge_i - mult_ge_next;
        for (size_t k = 0; k < exact; ++k) parts.push_back(i);
    }
    std::sort(parts.begin(), parts.end(), std::greater<size_t>());
    return parts;
}

NormalForm normal_form(const NilpotentPair& x) {
    if (!is_nilpotent(x))
        throw std::invalid_argument("normal_form: matrix is not nilpotent");
    const size_t d = x.dim();
    const uint32_t p = x.p;
    // kernels of powers
    std::vector<Subspace> ker;
    ker.push_back(Subspace(p, d));  // ker N^0 = 0
    FFMatrix power = x.n;
    size_t s = 0;
    for (size_t i = 1; i <= d; ++i) {
        ker.push_back(kernel_basis(power));
        if (ker.back().dim() == d) {
            s = i;
            break;
        }
        power = power * x.n;
    }
    if (s == 0) s = d == 0 ? 0 : d;
    // chains[c] = top vector v of height h: chain is v, Nv, ..., N^{h-1}v
    std::vector<std::pair<FFVec, size_t>> chains;
    for (size_t h = s; h >= 1; --h) {
        // span of K_{h-1} and N-images of chain elements of height > h
        Subspace w = ker[h - 1];
        std::vector<FFVec> lowered;
        for (auto& [v, hh] : chains) {
            FFVec cur = v;
            for (size_t k = 0; k < hh - h; ++k) cur = x.n.apply(cur);
            lowered.push_back(cur);
        }
        if (!lowered.empty())
            w = w.sum(Subspace::from_spanning_rows(
                FFMatrix::from_rows(p, d, lowered)));
        for (size_t i = 0; i < ker[h].dim(); ++i) {
            FFVec cand = ker[h].basis().row(i);
            if (w.contains(cand)) continue;
            chains.push_back({cand, h});
            std::vector<FFVec> one = {cand};
            w = w.sum(Subspace::from_spanning_rows(FFMatrix::from_rows(p, d, one)));
        }
    }
    std::stable_sort(chains.begin(), chains.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    Partition parts;
    std::vector<FFVec> cols;
    for (auto& [v, h] : chains) {
        parts.push_back(h);
        FFVec cur = v;
        for (size_t k = 0; k < h; ++k) {
            cols.push_back(cur);
            cur = x.n.apply(cur);
        }
    }
    FFMatrix basis = FFMatrix::from_cols(p, d, cols);
    if (!basis.inverse())
        throw std::logic_error("normal_form: chain basis is singular");
    return {parts, basis};
}

std::vector<Partition> partitions_up_to(size_t bound) {
    std::vector<Partition> out;
    for (size_t n = 1; n <= bound; ++n) {
        Partition cur;
        // parts weakly decreasing, first part from n down to 1
        std::function<void(size_t, size_t)> gen = [&](size_t rem, size_t maxp) {
            if (rem == 0) {
                out.push_back(cur);
                return;
            }
            for (size_t part = std::min(rem, maxp); part >= 1; --part) {
                cur.push_back(part);
                gen(rem - part, part);
                cur.pop_back();
            }
        };
        gen(n, n);
    }
    return out;
}

std::vector<NilpotentPair> enumerate_objects(uint32_t p, size_t bound) {
    std::vector<NilpotentPair> out;
    for (const Partition& q : partitions_up_to(bound))
        out.push_back(jordan_object(p, q));
    return out;
}

NilpotentPair zero_object(uint32_t p) { return {p, FFMatrix(p, 0, 0)}; }

TubeMorphism identity_morphism(const NilpotentPair& x) {
    return TubeMorphism(x, x, FFMatrix::identity(x.p, x.dim()));
}

TubeMorphism zero_morphism(const NilpotentPair& x, const NilpotentPair& y) {
    return TubeMorphism(x, y, FFMatrix(x.p, y.dim(), x.dim()));
}

TubeMorphism compose(const TubeMorphism& g, const TubeMorphism& f) {
    if (!(g.source == f.target))
        throw std::invalid_argument("tube compose: middle object mismatch");
    return TubeMorphism(f.source, g.target, g.f * f.f);
}

std::vector<TubeMorphism> hom_basis(const NilpotentPair& x,
                                    const NilpotentPair& y) {
    if (x.p != y.p) throw std::invalid_argument("hom_basis: modulus mismatch");
    const size_t dx = x.dim(), dy = y.dim();
    const uint32_t p = x.p;
    // unknowns f[i][j], i < dy, j < dx, flattened row-major
    FFMatrix cons(p, dy * dx, dy * dx);
    for (size_t i = 0; i < dy; ++i)
        for (size_t j = 0; j < dx; ++j) {
            size_t r = i * dx + j;
            for (size_t k = 0; k < dy; ++k) {
                size_t c = k * dx + j;
                cons.set(r, c, (cons.at(r, c) + y.n.at(i, k)) % p);
            }
            for (size_t l = 0; l < dx; ++l) {
                size_t c = i * dx + l;
                cons.set(r, c, (cons.at(r, c) + p - x.n.at(l, j) % p) % p);
            }
        }
    Subspace ker = kernel_basis(cons);
    std::vector<TubeMorphism> basis;
    for (size_t b = 0; b < ker.dim(); ++b) {
        FFVec v = ker.basis().row(b);
        FFMatrix m(p, dy, dx);
        for (size_t i = 0; i < dy; ++i)
            for (size_t j = 0; j < dx; ++j) m.set(i, j, v[i * dx + j]);
        basis.emplace_back(x, y, m);
    }
    return basis;
}

TubeMorphism block_quotient(uint32_t p, size_t a) {
    if (a < 2) throw std::invalid_argument("block_quotient: need a >= 2");
    FFMatrix m(p, a - 1, a);
    for (size_t i = 0; i < a - 1; ++i) m.set(i, i, 1);
    return TubeMorphism(jordan_block(p, a), jordan_block(p, a - 1), m);
}

TubeMorphism block_inclusion(uint32_t p, size_t a) {
    FFMatrix m(p, a + 1, a);
    for (size_t i = 0; i < a; ++i) m.set(i + 1, i, 1);
    return TubeMorphism(jordan_block(p, a), jordan_block(p, a + 1), m);
}

SubObject kernel(const TubeMorphism& f) {
    Subspace k = kernel_basis(f.f);
    FFMatrix b = k.basis().transpose();  // columns span ker f
    FFMatrix nb = f.source.n * b;
    auto nk = solve_matrix(b, nb);
    if (!nk) throw std::logic_error("tube kernel: kernel not N-stable");
    NilpotentPair obj{f.source.p, *nk};
    return {obj, TubeMorphism(obj, f.source, b)};
}

SubObject image(const TubeMorphism& f) {
    Subspace im = image_basis(f.f);
    FFMatrix b = im.basis().transpose();
    FFMatrix nb = f.target.n * b;
    auto ni = solve_matrix(b, nb);
    if (!ni) throw std::logic_error("tube image: image not N-stable");
    NilpotentPair obj{f.source.p, *ni};
    return {obj, TubeMorphism(obj, f.target, b)};
}

QuotObject cokernel(const TubeMorphism& f) {
    Subspace im = image_basis(f.f);
    QuotientMaps qm = quotient_maps(im);
    FFMatrix nq = qm.q * f.target.n * qm.s;
    NilpotentPair obj{f.source.p, nq};
    return {obj, TubeMorphism(f.target, obj, qm.q)};
}

bool is_epi(const TubeMorphism& f) {
    return rref(f.f).rank == f.target.dim();
}

bool is_mono(const TubeMorphism& f) {
    return rref(f.f).rank == f.source.dim();
}

DirectSum direct_sum(uint32_t p, const std::vector<NilpotentPair>& parts) {
    size_t d = 0;
    for (const auto& x : parts) d += x.dim();
    FFMatrix n(p, d, d);
    size_t off = 0;
    for (const auto& x : parts) {
        for (size_t i = 0; i < x.dim(); ++i)
            for (size_t j = 0; j < x.dim(); ++j)
                n.set(off + i, off + j, x.n.at(i, j));
        off += x.dim();
    }
    NilpotentPair total{p, n};
    DirectSum out{total, {}, {}};
    off = 0;
    for (const auto& x : parts) {
        FFMatrix inc(p, d, x.dim());
        FFMatrix prj(p, x.dim(), d);
        for (size_t i = 0; i < x.dim(); ++i) {
            inc.set(off + i, i, 1);
            prj.set(i, off + i, 1);
        }
        out.inclusions.emplace_back(x, total, inc);
        out.projections.emplace_back(total, x, prj);
        off += x.dim();
    }
    return out;
}

TubeExt ext1(const NilpotentPair& x, const NilpotentPair& y) {
    if (x.p != y.p) throw std::invalid_argument("ext1: modulus mismatch");
    const size_t dx = x.dim(), dy = y.dim();
    const uint32_t p = x.p;
    const size_t m = dy * dx;
    // coboundary operator g -> N_Y g - g N_X on flattened dy x dx matrices
    FFMatrix cob(p, m, m);
    for (size_t i = 0; i < dy; ++i)
        for (size_t j = 0; j < dx; ++j) {
            size_t r = i * dx + j;
            for (size_t k = 0; k < dy; ++k) {
                size_t c = k * dx + j;
                cob.set(r, c, (cob.at(r, c) + y.n.at(i, k)) % p);
            }
            for (size_t l = 0; l < dx; ++l) {
                size_t c = i * dx + l;
                cob.set(r, c, (cob.at(r, c) + p - x.n.at(l, j) % p) % p);
            }
        }
    TubeExt ext;
    ext.x = x;
    ext.y = y;
    ext.coboundaries = image_basis(cob);
    for (const FFVec& v : complement_reps(ext.coboundaries)) {
        FFMatrix phi(p, dy, dx);
        for (size_t i = 0; i < dy; ++i)
            for (size_t j = 0; j < dx; ++j) phi.set(i, j, v[i * dx + j]);
        ext.cocycles.push_back(phi);
    }
    ext.dim = ext.cocycles.size();
    return ext;
}

ShortExact materialize(const NilpotentPair& x, const NilpotentPair& y,
                       const FFMatrix& phi) {
    const size_t dx = x.dim(), dy = y.dim();
    const uint32_t p = x.p;
    if (phi.rows() != dy || phi.cols() != dx)
        throw std::invalid_argument("materialize: cocycle shape mismatch");
    FFMatrix ne(p, dy + dx, dy + dx);
    for (size_t i = 0; i < dy; ++i) {
        for (size_t j = 0; j < dy; ++j) ne.set(i, j, y.n.at(i, j));
        for (size_t j = 0; j < dx; ++j) ne.set(i, dy + j, phi.at(i, j));
    }
    for (size_t i = 0; i < dx; ++i)
        for (size_t j = 0; j < dx; ++j) ne.set(dy + i, dy + j, x.n.at(i, j));
    NilpotentPair e{p, ne};
    FFMatrix inc(p, dy + dx, dy);
    for (size_t i = 0; i < dy; ++i) inc.set(i, i, 1);
    FFMatrix prj(p, dx, dy + dx);
    for (size_t i = 0; i < dx; ++i) prj.set(i, dy + i, 1);
    return {y, e, x, TubeMorphism(y, e, inc), TubeMorphism(e, x, prj)};
}

namespace {

std::optional<TubeMorphism> factor_through(const TubeMorphism& t,
                                           const TubeMorphism& alpha) {
    // t' with t = alpha . t'
    auto basis = hom_basis(t.source, alpha.source);
    const uint32_t p = t.f.modulus();
    const size_t fl = t.f.rows() * t.f.cols();
    std::vector<FFVec> cols;
    for (const auto& b : basis) {
        FFMatrix c = alpha.f * b.f;
        cols.push_back(c.data());
    }
    FFMatrix sys = FFMatrix::from_cols(p, fl, cols);
    auto sol = solve(sys, t.f.data());
    if (!sol) return std::nullopt;
    FFMatrix acc(p, alpha.source.dim(), t.source.dim());
    for (size_t i = 0; i < basis.size(); ++i)
        acc = acc + basis[i].f.scaled((*sol)[i]);
    return TubeMorphism(t.source, alpha.source, acc);
}

}  // namespace

bool is_exact(const ShortExact& s) {
    if (!compose(s.proj, s.incl).is_zero()) return false;
    if (!is_mono(s.incl) || !is_epi(s.proj)) return false;
    return s.middle.dim() == s.left.dim() + s.right.dim();
}

bool is_split(const ShortExact& s) {
    return factor_through(identity_morphism(s.right), s.proj).has_value();
}

uint32_t serre_pairing(const FFMatrix& phi, const TubeMorphism& f) {
    if (f.f.cols() != phi.rows() || f.f.rows() != phi.cols())
        throw std::invalid_argument("serre_pairing: shape mismatch");
    return (f.f * phi).trace();
}

FFMatrix pullback_cocycle(const FFMatrix& phi, const TubeMorphism& t) {
    return phi * t.f;
}

ShortExact pullback_extension(const ShortExact& s, const TubeMorphism& t) {
    if (!(t.target == s.right))
        throw std::invalid_argument("pullback_extension: target mismatch");
    const uint32_t p = s.middle.p;
    const size_t de = s.middle.dim(), dt = t.source.dim();
    // P = {(e, u) : proj(e) = t(u)} inside E (+) T
    FFMatrix sys = s.proj.f.hstack(t.f.scaled(p - 1));
    Subspace k = kernel_basis(sys);
    FFMatrix b = k.basis().transpose();  // (de+dt) x dp
    DirectSum et = direct_sum(p, {s.middle, t.source});
    FFMatrix nb = et.total.n * b;
    auto np = solve_matrix(b, nb);
    if (!np) throw std::logic_error("pullback: fiber product not stable");
    NilpotentPair pobj{p, *np};
    // projection to T and inclusion of Y
    FFMatrix projt = b.submatrix(de, 0, dt, b.cols());
    FFMatrix incy = s.incl.f.vstack(FFMatrix(p, dt, s.left.dim()));
    auto inc = solve_matrix(b, incy);
    if (!inc) throw std::logic_error("pullback: Y does not embed");
    return {s.left, pobj, t.source, TubeMorphism(s.left, pobj, *inc),
            TubeMorphism(pobj, t.source, projt)};
}

ShortExact almost_split_sequence(uint32_t p, size_t l) {
    if (l < 1) throw std::invalid_argument("almost_split_sequence: l >= 1");
    NilpotentPair jl = jordan_block(p, l);
    if (l == 1) {
        NilpotentPair mid = jordan_block(p, 2);
        TubeMorphism inc = block_inclusion(p, 1);
        TubeMorphism q = block_quotient(p, 2);
        return {jl, mid, jl, inc, TubeMorphism(mid, jl, q.f.scaled(p - 1))};
    }
    Partition mp = {l + 1, l - 1};
    NilpotentPair mid = jordan_object(p, mp);
    TubeMorphism inc = block_inclusion(p, l);        // J_l -> J_{l+1}
    TubeMorphism qdown = block_quotient(p, l);       // J_l -> J_{l-1}
    FFMatrix iota = inc.f.vstack(qdown.f);
    TubeMorphism qtop = block_quotient(p, l + 1);    // J_{l+1} -> J_l
    TubeMorphism incup = block_inclusion(p, l - 1);  // J_{l-1} -> J_l
    FFMatrix pi = qtop.f.scaled(p - 1).hstack(incup.f);
    return {jl, mid, jl, TubeMorphism(jl, mid, iota), TubeMorphism(mid, jl, pi)};
}

bool ext_vanishing(const TubeMorphism& f, size_t bound) {
    for (const NilpotentPair& w : enumerate_objects(f.source.p, bound)) {
        TubeExt ey = ext1(f.target, w);
        if (ey.dim == 0) continue;
        TubeExt ex = ext1(f.source, w);
        for (const FFMatrix& phi : ey.cocycles) {
            FFMatrix pulled = phi * f.f;
            if (!ex.coboundaries.contains(pulled.data())) return false;
        }
    }
    return true;
}

}  // namespace tube
}  // namespace detmor
