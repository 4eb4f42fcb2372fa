#include "detmor/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace detmor {
namespace quiver {

Quiver::Quiver(size_t n, std::vector<std::pair<size_t, size_t>> a)
    : n_vertices(n), arrows(std::move(a)) {
    for (auto& [s, t] : arrows)
        if (s >= n || t >= n)
            throw std::invalid_argument("Quiver: arrow endpoint out of range");
    if (!is_acyclic())
        throw std::invalid_argument("Quiver: oriented cycles are not allowed");
}

bool Quiver::is_acyclic() const {
    std::vector<size_t> indeg(n_vertices, 0);
    for (auto& [s, t] : arrows) indeg[t]++;
    std::vector<size_t> stack;
    for (size_t v = 0; v < n_vertices; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    size_t seen = 0;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        ++seen;
        for (auto& [s, t] : arrows)
            if (s == v && --indeg[t] == 0) stack.push_back(t);
    }
    return seen == n_vertices;
}

QuiverPtr linear_an(size_t n) {
    std::vector<std::pair<size_t, size_t>> arrows;
    for (size_t i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
    return std::make_shared<const Quiver>(n, arrows);
}

bool is_type_a(const Quiver& q) {
    if (q.arrows.size() + 1 != q.n_vertices) return false;
    std::vector<size_t> deg(q.n_vertices, 0);
    for (auto& [s, t] : q.arrows) {
        if (s == t) return false;
        deg[s]++;
        deg[t]++;
    }
    size_t ones = 0;
    for (size_t d : deg) {
        if (d > 2) return false;
        if (d == 1) ++ones;
        if (d == 0 && q.n_vertices > 1) return false;
    }
    return q.n_vertices == 1 || ones == 2;
}

Representation::Representation(QuiverPtr quiver, uint32_t mod,
                               std::vector<size_t> d,
                               std::vector<FFMatrix> maps)
    : q(std::move(quiver)), p(mod), dims(std::move(d)),
      arrow_maps(std::move(maps)) {
    if (dims.size() != q->n_vertices || arrow_maps.size() != q->arrows.size())
        throw std::invalid_argument("Representation: size mismatch");
    for (size_t a = 0; a < q->arrows.size(); ++a) {
        auto [s, t] = q->arrows[a];
        if (arrow_maps[a].rows() != dims[t] || arrow_maps[a].cols() != dims[s])
            throw std::invalid_argument("Representation: arrow matrix shape");
        if (arrow_maps[a].modulus() != p)
            throw std::invalid_argument("Representation: modulus mismatch");
    }
}

size_t Representation::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), size_t{0});
}

bool Representation::operator==(const Representation& o) const {
    return *q == *o.q && p == o.p && dims == o.dims && arrow_maps == o.arrow_maps;
}

bool Representation::canonical_less(const Representation& o) const {
    if (total_dim() != o.total_dim()) return total_dim() < o.total_dim();
    if (dims != o.dims) return dims < o.dims;
    for (size_t a = 0; a < arrow_maps.size(); ++a)
        if (arrow_maps[a] != o.arrow_maps[a]) return arrow_maps[a] < o.arrow_maps[a];
    return false;
}

Representation zero_representation(QuiverPtr q, uint32_t p) {
    std::vector<size_t> dims(q->n_vertices, 0);
    std::vector<FFMatrix> maps;
    for (size_t a = 0; a < q->arrows.size(); ++a) maps.emplace_back(p, 0, 0);
    return Representation(q, p, dims, maps);
}

Representation simple_at(QuiverPtr q, uint32_t p, size_t v) {
    std::vector<size_t> dims(q->n_vertices, 0);
    dims[v] = 1;
    std::vector<FFMatrix> maps;
    for (auto& [s, t] : q->arrows)
        maps.emplace_back(p, dims[t], dims[s]);
    return Representation(q, p, dims, maps);
}

RepMorphism::RepMorphism(Representation src, Representation tgt,
                         std::vector<FFMatrix> m)
    : source(std::move(src)), target(std::move(tgt)), maps(std::move(m)) {
    if (!(*source.q == *target.q) || source.p != target.p)
        throw std::invalid_argument("RepMorphism: quiver/field mismatch");
    if (maps.size() != source.q->n_vertices)
        throw std::invalid_argument("RepMorphism: vertex map count");
    for (size_t v = 0; v < maps.size(); ++v)
        if (maps[v].rows() != target.dims[v] || maps[v].cols() != source.dims[v])
            throw std::invalid_argument("RepMorphism: vertex matrix shape");
    for (size_t a = 0; a < source.q->arrows.size(); ++a) {
        auto [s, t] = source.q->arrows[a];
        if (target.arrow_maps[a] * maps[s] != maps[t] * source.arrow_maps[a])
            throw std::invalid_argument("RepMorphism: square does not commute");
    }
}

bool RepMorphism::is_zero() const {
    return std::all_of(maps.begin(), maps.end(),
                       [](const FFMatrix& m) { return m.is_zero(); });
}

FFVec RepMorphism::flatten() const {
    FFVec out;
    for (const FFMatrix& m : maps)
        out.insert(out.end(), m.data().begin(), m.data().end());
    return out;
}

RepMorphism identity_morphism(const Representation& m) {
    std::vector<FFMatrix> maps;
    for (size_t d : m.dims) maps.push_back(FFMatrix::identity(m.p, d));
    return RepMorphism(m, m, maps);
}

RepMorphism zero_morphism(const Representation& src, const Representation& tgt) {
    std::vector<FFMatrix> maps;
    for (size_t v = 0; v < src.q->n_vertices; ++v)
        maps.emplace_back(src.p, tgt.dims[v], src.dims[v]);
    return RepMorphism(src, tgt, maps);
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
    if (!(g.source == f.target))
        throw std::invalid_argument("compose: middle object mismatch");
    std::vector<FFMatrix> maps;
    for (size_t v = 0; v < f.maps.size(); ++v) maps.push_back(g.maps[v] * f.maps[v]);
    return RepMorphism(f.source, g.target, maps);
}

RepMorphism add(const RepMorphism& a, const RepMorphism& b) {
    std::vector<FFMatrix> maps;
    for (size_t v = 0; v < a.maps.size(); ++v) maps.push_back(a.maps[v] + b.maps[v]);
    return RepMorphism(a.source, a.target, maps);
}

RepMorphism scale(const RepMorphism& a, uint32_t c) {
    std::vector<FFMatrix> maps;
    for (const auto& m : a.maps) maps.push_back(m.scaled(c));
    return RepMorphism(a.source, a.target, maps);
}

RepMorphism unflatten(const Representation& src, const Representation& tgt,
                      const FFVec& v) {
    std::vector<FFMatrix> maps;
    size_t off = 0;
    for (size_t vx = 0; vx < src.q->n_vertices; ++vx) {
        size_t r = tgt.dims[vx], c = src.dims[vx];
        FFMatrix m(src.p, r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m.set(i, j, v[off + i * c + j]);
        off += r * c;
        maps.push_back(m);
    }
    return RepMorphism(src, tgt, maps);
}

std::vector<RepMorphism> hom_basis(const Representation& m,
                                   const Representation& n) {
    if (!(*m.q == *n.q) || m.p != n.p)
        throw std::invalid_argument("hom_basis: quiver/field mismatch");
    const uint32_t p = m.p;
    const size_t nv = m.q->n_vertices;
    std::vector<size_t> off(nv + 1, 0);
    for (size_t v = 0; v < nv; ++v)
        off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    const size_t unknowns = off[nv];
    size_t n_rows = 0;
    for (auto& [s, t] : m.q->arrows) n_rows += n.dims[t] * m.dims[s];
    FFMatrix cons(p, n_rows, unknowns);
    size_t row = 0;
    for (size_t a = 0; a < m.q->arrows.size(); ++a) {
        auto [s, t] = m.q->arrows[a];
        const FFMatrix& na = n.arrow_maps[a];
        const FFMatrix& ma = m.arrow_maps[a];
        for (size_t i = 0; i < n.dims[t]; ++i)
            for (size_t j = 0; j < m.dims[s]; ++j) {
                // sum_k N(a)[i,k] f_s[k,j] - sum_l f_t[i,l] M(a)[l,j] = 0
                for (size_t k = 0; k < n.dims[s]; ++k) {
                    size_t c = off[s] + k * m.dims[s] + j;
                    cons.set(row, c, (cons.at(row, c) + na.at(i, k)) % p);
                }
                for (size_t l = 0; l < m.dims[t]; ++l) {
                    size_t c = off[t] + i * m.dims[t] + l;
                    cons.set(row, c, (cons.at(row, c) + p - ma.at(l, j) % p) % p);
                }
                ++row;
            }
    }
    Subspace ker = kernel_basis(cons);
    std::vector<RepMorphism> basis;
    for (size_t b = 0; b < ker.dim(); ++b)
        basis.push_back(unflatten(m, n, ker.basis().row(b)));
    return basis;
}

size_t hom_dim(const Representation& m, const Representation& n) {
    return hom_basis(m, n).size();
}

bool is_epi(const RepMorphism& f) {
    for (size_t v = 0; v < f.maps.size(); ++v)
        if (rref(f.maps[v]).rank != f.target.dims[v]) return false;
    return true;
}

bool is_mono(const RepMorphism& f) {
    for (size_t v = 0; v < f.maps.size(); ++v)
        if (rref(f.maps[v]).rank != f.source.dims[v]) return false;
    return true;
}

SubObject kernel(const RepMorphism& f) {
    const uint32_t p = f.source.p;
    std::vector<FFMatrix> incl_cols;
    std::vector<size_t> kdims;
    for (size_t v = 0; v < f.maps.size(); ++v) {
        Subspace k = kernel_basis(f.maps[v]);
        incl_cols.push_back(k.basis().transpose());
        kdims.push_back(k.dim());
    }
    std::vector<FFMatrix> kmaps;
    for (size_t a = 0; a < f.source.q->arrows.size(); ++a) {
        auto [s, t] = f.source.q->arrows[a];
        auto sol = solve_matrix(incl_cols[t], f.source.arrow_maps[a] * incl_cols[s]);
        if (!sol) throw std::logic_error("kernel: not arrow stable");
        kmaps.push_back(*sol);
    }
    Representation obj(f.source.q, p, kdims, kmaps);
    return {obj, RepMorphism(obj, f.source, incl_cols)};
}

SubObject image(const RepMorphism& f) {
    const uint32_t p = f.source.p;
    std::vector<FFMatrix> incl_cols;
    std::vector<size_t> idims;
    for (size_t v = 0; v < f.maps.size(); ++v) {
        Subspace im = image_basis(f.maps[v]);
        incl_cols.push_back(im.basis().transpose());
        idims.push_back(im.dim());
    }
    std::vector<FFMatrix> imaps;
    for (size_t a = 0; a < f.source.q->arrows.size(); ++a) {
        auto [s, t] = f.source.q->arrows[a];
        auto sol = solve_matrix(incl_cols[t], f.target.arrow_maps[a] * incl_cols[s]);
        if (!sol) throw std::logic_error("image: not arrow stable");
        imaps.push_back(*sol);
    }
    Representation obj(f.source.q, p, idims, imaps);
    return {obj, RepMorphism(obj, f.target, incl_cols)};
}

QuotObject cokernel(const RepMorphism& f) {
    const uint32_t p = f.source.p;
    std::vector<QuotientMaps> qs;
    std::vector<size_t> cdims;
    for (size_t v = 0; v < f.maps.size(); ++v) {
        qs.push_back(quotient_maps(image_basis(f.maps[v])));
        cdims.push_back(qs.back().q.rows());
    }
    std::vector<FFMatrix> cmaps;
    for (size_t a = 0; a < f.source.q->arrows.size(); ++a) {
        auto [s, t] = f.source.q->arrows[a];
        cmaps.push_back(qs[t].q * f.target.arrow_maps[a] * qs[s].s);
    }
    Representation obj(f.source.q, p, cdims, cmaps);
    std::vector<FFMatrix> pmaps;
    for (auto& qm : qs) pmaps.push_back(qm.q);
    return {obj, RepMorphism(f.target, obj, pmaps)};
}

DirectSum direct_sum(QuiverPtr q, uint32_t p,
                     const std::vector<Representation>& parts) {
    const size_t nv = q->n_vertices;
    std::vector<size_t> dims(nv, 0);
    for (const auto& r : parts)
        for (size_t v = 0; v < nv; ++v) dims[v] += r.dims[v];
    std::vector<FFMatrix> maps;
    for (size_t a = 0; a < q->arrows.size(); ++a) {
        auto [s, t] = q->arrows[a];
        FFMatrix m(p, dims[t], dims[s]);
        size_t ro = 0, co = 0;
        for (const auto& r : parts) {
            for (size_t i = 0; i < r.dims[t]; ++i)
                for (size_t j = 0; j < r.dims[s]; ++j)
                    m.set(ro + i, co + j, r.arrow_maps[a].at(i, j));
            ro += r.dims[t];
            co += r.dims[s];
        }
        maps.push_back(m);
    }
    Representation total(q, p, dims, maps);
    DirectSum out{total, {}, {}};
    std::vector<size_t> off(nv, 0);
    for (const auto& r : parts) {
        std::vector<FFMatrix> inc, prj;
        for (size_t v = 0; v < nv; ++v) {
            FFMatrix iv(p, dims[v], r.dims[v]);
            FFMatrix pv(p, r.dims[v], dims[v]);
            for (size_t i = 0; i < r.dims[v]; ++i) {
                iv.set(off[v] + i, i, 1);
                pv.set(i, off[v] + i, 1);
            }
            inc.push_back(iv);
            prj.push_back(pv);
        }
        out.inclusions.emplace_back(r, total, inc);
        out.projections.emplace_back(total, r, prj);
        for (size_t v = 0; v < nv; ++v) off[v] += r.dims[v];
    }
    return out;
}

namespace {

bool is_invertible(const RepMorphism& f) {
    if (f.source.dims != f.target.dims) return false;
    for (const auto& m : f.maps)
        if (!m.inverse()) return false;
    return true;
}

RepMorphism lincomb(const Representation& src, const Representation& tgt,
                    const std::vector<RepMorphism>& basis, const FFVec& c) {
    RepMorphism acc = zero_morphism(src, tgt);
    for (size_t i = 0; i < basis.size(); ++i)
        if (c[i]) acc = add(acc, scale(basis[i], c[i]));
    return acc;
}

double pow_size(uint32_t p, size_t d) {
    double s = 1;
    for (size_t i = 0; i < d; ++i) {
        s *= p;
        if (s > 1e18) return 1e18;
    }
    return s;
}

}  // namespace

IsoResult iso_test(const Representation& m, const Representation& n,
                   size_t threshold) {
    if (m.dims != n.dims) return {IsoStatus::NonIso, std::nullopt};
    auto basis = hom_basis(m, n);
    if (basis.empty()) {
        if (m.total_dim() == 0) return {IsoStatus::Iso, zero_morphism(m, n)};
        return {IsoStatus::NonIso, std::nullopt};
    }
    if (pow_size(m.p, basis.size()) <= (double)threshold) {
        FFVec c(basis.size(), 0);
        while (next_tuple(c, m.p)) {
            RepMorphism f = lincomb(m, n, basis, c);
            if (is_invertible(f)) return {IsoStatus::Iso, f};
        }
        return {IsoStatus::NonIso, std::nullopt};
    }
    // invariants agree only on dimension vectors at this point; try random
    // combinations, and refuse to certify failure
    if (hom_dim(m, n) != hom_dim(n, m) || hom_dim(m, m) != hom_dim(n, n))
        return {IsoStatus::NonIso, std::nullopt};
    std::mt19937_64 rng(0xd157a2u + m.total_dim());
    for (int tries = 0; tries < 300; ++tries) {
        FFVec c(basis.size());
        for (auto& x : c) x = static_cast<uint32_t>(rng() % m.p);
        RepMorphism f = lincomb(m, n, basis, c);
        if (is_invertible(f)) return {IsoStatus::Iso, f};
    }
    return {IsoStatus::Inconclusive, std::nullopt};
}

namespace {

// Split M along a nontrivial idempotent or a Fitting pair; nullopt when M
// could not be split (indecomposable as far as the search can tell).
std::optional<std::pair<SubObject, SubObject>> try_split(
    const Representation& m, size_t threshold) {
    auto end_basis = hom_basis(m, m);
    const size_t d = end_basis.size();
    if (pow_size(m.p, d) <= (double)threshold) {
        FFVec c(d, 0);
        while (next_tuple(c, m.p)) {
            RepMorphism e = lincomb(m, m, end_basis, c);
            if (!(compose(e, e).flatten() == e.flatten())) continue;
            if (e.is_zero()) continue;
            bool is_id = true;
            for (size_t v = 0; v < e.maps.size(); ++v)
                if (!e.maps[v].is_identity()) is_id = false;
            if (is_id) continue;
            RepMorphism comp = add(identity_morphism(m), scale(e, m.p - 1));
            return std::make_pair(image(e), image(comp));
        }
        return std::nullopt;
    }
    // Fitting decomposition along random endomorphisms
    std::mt19937_64 rng(0xf177u + m.total_dim());
    const size_t n = m.total_dim();
    for (int tries = 0; tries < 400; ++tries) {
        FFVec c(d);
        for (auto& x : c) x = static_cast<uint32_t>(rng() % m.p);
        RepMorphism phi = lincomb(m, m, end_basis, c);
        RepMorphism psi = phi;
        for (size_t k = 1; k < n; k <<= 1) psi = compose(psi, psi);
        SubObject ker = kernel(psi);
        SubObject im = image(psi);
        if (ker.obj.total_dim() == 0 || im.obj.total_dim() == 0) continue;
        return std::make_pair(im, ker);
    }
    return std::nullopt;
}

void decompose_rec(const Representation& m, const RepMorphism& embed,
                   size_t threshold, std::vector<Representation>& parts,
                   std::vector<RepMorphism>& embeds) {
    if (m.total_dim() == 0) return;
    auto split = try_split(m, threshold);
    if (!split) {
        parts.push_back(m);
        embeds.push_back(embed);
        return;
    }
    decompose_rec(split->first.obj, compose(embed, split->first.incl), threshold,
                  parts, embeds);
    decompose_rec(split->second.obj, compose(embed, split->second.incl),
                  threshold, parts, embeds);
}

}  // namespace

Decomposition decompose(const Representation& m, size_t threshold) {
    std::vector<Representation> parts;
    std::vector<RepMorphism> embeds;
    decompose_rec(m, identity_morphism(m), threshold, parts, embeds);
    DirectSum ds = direct_sum(m.q, m.p, parts);
    RepMorphism iso = zero_morphism(ds.total, m);
    for (size_t i = 0; i < parts.size(); ++i)
        iso = add(iso, compose(embeds[i], ds.projections[i]));
    if (!is_invertible(iso) && m.total_dim() > 0)
        throw std::logic_error("decompose: summand embeddings are not an iso");
    return {parts, iso};
}

bool is_indecomposable(const Representation& m, size_t threshold) {
    return m.total_dim() > 0 && !try_split(m, threshold);
}

std::vector<std::pair<Representation, size_t>> decompose_multiplicities(
    const Representation& m) {
    Decomposition d = decompose(m);
    std::vector<std::pair<Representation, size_t>> out;
    for (const auto& part : d.parts) {
        bool found = false;
        for (auto& [rep, mult] : out) {
            if (iso_test(rep, part).status == IsoStatus::Iso) {
                ++mult;
                found = true;
                break;
            }
        }
        if (!found) out.push_back({part, 1});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first.canonical_less(b.first);
    });
    return out;
}

std::vector<Representation> enumerate_indecomposables(QuiverPtr q, uint32_t p,
                                                      size_t bound,
                                                      size_t limit) {
    const size_t nv = q->n_vertices;
    std::vector<Representation> found;
    // iterate dimension vectors with total in [1, bound]
    std::vector<size_t> dims(nv, 0);
    auto advance_dims = [&]() {
        for (size_t v = 0; v < nv; ++v) {
            if (++dims[v] <= bound) return true;
            dims[v] = 0;
        }
        return false;
    };
    double work = 0;
    while (advance_dims()) {
        size_t total = std::accumulate(dims.begin(), dims.end(), size_t{0});
        if (total == 0 || total > bound) continue;
        size_t entries = 0;
        for (auto& [s, t] : q->arrows) entries += dims[t] * dims[s];
        double count = pow_size(p, entries);
        work += count;
        if (work > (double)limit)
            throw std::runtime_error(
                "enumerate_indecomposables: bound too large for exhaustive search");
        FFVec flat(entries, 0);
        do {
            std::vector<FFMatrix> maps;
            size_t off = 0;
            for (auto& [s, t] : q->arrows) {
                FFMatrix mm(p, dims[t], dims[s]);
                for (size_t i = 0; i < dims[t]; ++i)
                    for (size_t j = 0; j < dims[s]; ++j)
                        mm.set(i, j, flat[off + i * dims[s] + j]);
                off += dims[t] * dims[s];
                maps.push_back(mm);
            }
            Representation rep(q, p, dims, maps);
            if (!is_indecomposable(rep)) continue;
            bool known = false;
            for (const auto& r : found)
                if (r.dims == rep.dims &&
                    iso_test(r, rep).status == IsoStatus::Iso) {
                    known = true;
                    break;
                }
            if (!known) found.push_back(rep);
        } while (next_tuple(flat, p));
    }
    std::sort(found.begin(), found.end(),
              [](const Representation& a, const Representation& b) {
                  return a.canonical_less(b);
              });
    return found;
}

}  // namespace quiver
}  // namespace detmor
