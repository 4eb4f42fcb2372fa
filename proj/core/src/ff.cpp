#include "detmor/ff.hpp"

#include <algorithm>
#include <sstream>

namespace detmor {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint32_t fp_inv(uint32_t a, uint32_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("fp_inv: zero is not invertible");
    // extended Euclid
    int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

FFMatrix::FFMatrix(uint32_t p, size_t rows, size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (p < 2) throw std::invalid_argument("FFMatrix: modulus must be >= 2");
}

FFMatrix FFMatrix::identity(uint32_t p, size_t n) {
    FFMatrix m(p, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FFMatrix FFMatrix::from_rows(uint32_t p, size_t cols,
                             const std::vector<FFVec>& rows) {
    FFMatrix m(p, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("from_rows: row length mismatch");
        for (size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

FFMatrix FFMatrix::from_cols(uint32_t p, size_t rows,
                             const std::vector<FFVec>& cols) {
    FFMatrix m(p, rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("from_cols: column length mismatch");
        for (size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

FFVec FFMatrix::row(size_t i) const {
    return FFVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

FFVec FFMatrix::col(size_t j) const {
    FFVec v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

FFMatrix FFMatrix::operator*(const FFMatrix& o) const {
    if (p_ != o.p_ || cols_ != o.rows_)
        throw std::invalid_argument("FFMatrix::mul: shape/modulus mismatch");
    FFMatrix r(p_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            uint64_t x = at(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                uint64_t v = r.at(i, j) + x * o.at(k, j);
                r.set(i, j, static_cast<uint32_t>(v % p_));
            }
        }
    return r;
}

FFMatrix FFMatrix::operator+(const FFMatrix& o) const {
    if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("FFMatrix::add: shape mismatch");
    FFMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + o.a_[i]) % p_;
    return r;
}

FFMatrix FFMatrix::operator-(const FFMatrix& o) const {
    if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("FFMatrix::sub: shape mismatch");
    FFMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = (a_[i] + p_ - o.a_[i]) % p_;
    return r;
}

FFMatrix FFMatrix::scaled(uint32_t c) const {
    FFMatrix r = *this;
    c %= p_;
    for (auto& x : r.a_) x = static_cast<uint32_t>((uint64_t)x * c % p_);
    return r;
}

FFMatrix FFMatrix::transpose() const {
    FFMatrix r(p_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

FFMatrix FFMatrix::pow(size_t k) const {
    if (rows_ != cols_) throw std::invalid_argument("pow: square matrix required");
    FFMatrix r = identity(p_, rows_);
    FFMatrix b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

FFVec FFMatrix::apply(const FFVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    FFVec r(rows_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        uint64_t s = 0;
        for (size_t j = 0; j < cols_; ++j) s += (uint64_t)at(i, j) * v[j] % p_;
        r[i] = static_cast<uint32_t>(s % p_);
    }
    return r;
}

FFMatrix FFMatrix::hstack(const FFMatrix& o) const {
    if (p_ != o.p_ || rows_ != o.rows_)
        throw std::invalid_argument("hstack: row count mismatch");
    FFMatrix r(p_, rows_, cols_ + o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        for (size_t j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
    }
    return r;
}

FFMatrix FFMatrix::vstack(const FFMatrix& o) const {
    if (p_ != o.p_ || cols_ != o.cols_)
        throw std::invalid_argument("vstack: column count mismatch");
    FFMatrix r(p_, rows_ + o.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (size_t i = 0; i < o.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(rows_ + i, j, o.at(i, j));
    return r;
}

FFMatrix FFMatrix::submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw std::invalid_argument("submatrix: out of range");
    FFMatrix r(p_, nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) r.set(i, j, at(r0 + i, c0 + j));
    return r;
}

bool FFMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](uint32_t x) { return x == 0; });
}

bool FFMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(p_, rows_);
}

uint32_t FFMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: square matrix required");
    uint64_t s = 0;
    for (size_t i = 0; i < rows_; ++i) s += at(i, i);
    return static_cast<uint32_t>(s % p_);
}

std::optional<FFMatrix> FFMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    RrefResult r = rref(hstack(identity(p_, rows_)));
    if (r.rank != rows_ || !r.mat.submatrix(0, 0, rows_, rows_).is_identity())
        return std::nullopt;
    return r.mat.submatrix(0, rows_, rows_, rows_);
}

bool FFMatrix::operator<(const FFMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return a_ < o.a_;
}

std::string FFMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

RrefResult rref(const FFMatrix& m) {
    RrefResult res;
    res.mat = m;
    FFMatrix& a = res.mat;
    const uint32_t p = m.modulus();
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && a.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols(); ++j) {
                uint32_t t = a.at(r, j);
                a.set(r, j, a.at(piv, j));
                a.set(piv, j, t);
            }
        uint32_t inv = fp_inv(a.at(r, c), p);
        for (size_t j = 0; j < m.cols(); ++j)
            a.set(r, j, static_cast<uint32_t>((uint64_t)a.at(r, j) * inv % p));
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            uint32_t f = a.at(i, c);
            if (f == 0) continue;
            for (size_t j = 0; j < m.cols(); ++j) {
                uint64_t v = a.at(i, j) + (uint64_t)(p - f) * a.at(r, j) % p;
                a.set(i, j, static_cast<uint32_t>(v % p));
            }
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

Subspace::Subspace(uint32_t p, size_t ambient_dim)
    : p_(p), ambient_(ambient_dim), basis_(p, 0, ambient_dim) {}

Subspace Subspace::from_spanning_rows(const FFMatrix& rows) {
    Subspace s(rows.modulus(), rows.cols());
    RrefResult r = rref(rows);
    s.basis_ = r.mat.submatrix(0, 0, r.rank, rows.cols());
    return s;
}

Subspace Subspace::full(uint32_t p, size_t n) {
    return from_spanning_rows(FFMatrix::identity(p, n));
}

FFVec Subspace::reduce(const FFVec& v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("Subspace::reduce: ambient mismatch");
    FFVec r = v;
    const RrefResult rr = rref(basis_);  // basis_ is already rref; pivots cheap
    for (size_t i = 0; i < basis_.rows(); ++i) {
        size_t c = rr.pivots[i];
        uint32_t f = r[c] % p_;
        if (f == 0) continue;
        for (size_t j = 0; j < ambient_; ++j) {
            uint64_t x = r[j] + (uint64_t)(p_ - f) * basis_.at(i, j) % p_;
            r[j] = static_cast<uint32_t>(x % p_);
        }
    }
    return r;
}

bool Subspace::contains(const FFVec& v) const {
    FFVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

bool Subspace::is_subset_of(const Subspace& o) const {
    if (p_ != o.p_ || ambient_ != o.ambient_)
        throw std::invalid_argument("is_subset_of: ambient mismatch");
    for (size_t i = 0; i < basis_.rows(); ++i)
        if (!o.contains(basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (p_ != o.p_ || ambient_ != o.ambient_)
        throw std::invalid_argument("sum: ambient mismatch");
    return from_spanning_rows(basis_.vstack(o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (p_ != o.p_ || ambient_ != o.ambient_)
        throw std::invalid_argument("intersect: ambient mismatch");
    // (c1, c2) with c1 B1 = c2 B2; intersection vectors are c1 B1.
    FFMatrix stacked = basis_.vstack(o.basis_.scaled(p_ - 1));
    Subspace ker = kernel_basis(stacked.transpose());
    std::vector<FFVec> rows;
    for (size_t i = 0; i < ker.dim(); ++i) {
        FFVec c = ker.basis().row(i);
        FFVec c1(c.begin(), c.begin() + basis_.rows());
        rows.push_back(basis_.transpose().apply(c1));
    }
    return from_spanning_rows(FFMatrix::from_rows(p_, ambient_, rows));
}

bool Subspace::operator<(const Subspace& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    if (dim() != o.dim()) return dim() < o.dim();
    return basis_ < o.basis_;
}

Subspace image_basis(const FFMatrix& m) {
    return Subspace::from_spanning_rows(m.transpose());
}

Subspace kernel_basis(const FFMatrix& m) {
    RrefResult r = rref(m);
    const uint32_t p = m.modulus();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : r.pivots) is_pivot[c] = true;
    std::vector<FFVec> rows;
    for (size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        FFVec v(m.cols(), 0);
        v[c] = 1;
        for (size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = (p - r.mat.at(i, c)) % p;
        rows.push_back(v);
    }
    return Subspace::from_spanning_rows(FFMatrix::from_rows(p, m.cols(), rows));
}

std::optional<FFVec> solve(const FFMatrix& m, const FFVec& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    FFMatrix aug =
        m.hstack(FFMatrix::from_cols(m.modulus(), m.rows(), {b}));
    RrefResult r = rref(aug);
    FFVec x(m.cols(), 0);
    for (size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] == m.cols()) return std::nullopt;  // inconsistent
        x[r.pivots[i]] = r.mat.at(i, m.cols());
    }
    return x;
}

std::optional<FFMatrix> solve_matrix(const FFMatrix& a, const FFMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve_matrix: row count mismatch");
    FFMatrix aug = a.hstack(b);
    RrefResult r = rref(aug);
    FFMatrix x(a.modulus(), a.cols(), b.cols());
    for (size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] >= a.cols()) return std::nullopt;
        for (size_t j = 0; j < b.cols(); ++j)
            x.set(r.pivots[i], j, r.mat.at(i, a.cols() + j));
    }
    return x;
}

QuotientMaps quotient_maps(const Subspace& w) {
    const size_t n = w.ambient_dim();
    const size_t d = w.dim();
    const uint32_t p = w.modulus();
    RrefResult r = rref(w.basis());
    std::vector<bool> is_pivot(n, false);
    for (size_t c : r.pivots) is_pivot[c] = true;
    // reduction matrix: red[j][c] = delta_{jc} - sum_i [c == P_i] w_i[j]
    FFMatrix red = FFMatrix::identity(p, n);
    for (size_t i = 0; i < d; ++i) {
        size_t c = r.pivots[i];
        for (size_t j = 0; j < n; ++j) {
            uint32_t cur = red.at(j, c);
            red.set(j, c, (cur + p - w.basis().at(i, j) % p) % p);
        }
    }
    QuotientMaps out{FFMatrix(p, n - d, n), FFMatrix(p, n, n - d)};
    size_t k = 0;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        for (size_t j = 0; j < n; ++j) out.q.set(k, j, red.at(c, j));
        out.s.set(c, k, 1);
        ++k;
    }
    return out;
}

bool next_tuple(FFVec& t, uint32_t p) {
    for (size_t i = 0; i < t.size(); ++i) {
        if (++t[i] < p) return true;
        t[i] = 0;
    }
    return false;
}

std::vector<FFVec> complement_reps(const Subspace& s) {
    RrefResult r = rref(s.basis());
    std::vector<bool> is_pivot(s.ambient_dim(), false);
    for (size_t c : r.pivots) is_pivot[c] = true;
    std::vector<FFVec> reps;
    for (size_t c = 0; c < s.ambient_dim(); ++c) {
        if (is_pivot[c]) continue;
        FFVec v(s.ambient_dim(), 0);
        v[c] = 1;
        reps.push_back(v);
    }
    return reps;
}

}  // namespace detmor
