#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact dense linear algebra over a prime field F_p.
// All arithmetic is modular with 64-bit intermediates; p is assumed prime
// and < 2^31. Matrices of shape 0 x n and n x 0 are legal throughout.

namespace detmor {

bool is_prime(uint32_t n);
uint32_t fp_inv(uint32_t a, uint32_t p);

using FFVec = std::vector<uint32_t>;

class FFMatrix {
public:
    FFMatrix() = default;
    FFMatrix(uint32_t p, size_t rows, size_t cols);

    static FFMatrix identity(uint32_t p, size_t n);
    static FFMatrix from_rows(uint32_t p, size_t cols,
                              const std::vector<FFVec>& rows);
    static FFMatrix from_cols(uint32_t p, size_t rows,
                              const std::vector<FFVec>& cols);

    uint32_t modulus() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint32_t v) { a_[i * cols_ + j] = v % p_; }

    FFVec row(size_t i) const;
    FFVec col(size_t j) const;
    const std::vector<uint32_t>& data() const { return a_; }

    FFMatrix operator*(const FFMatrix& o) const;
    FFMatrix operator+(const FFMatrix& o) const;
    FFMatrix operator-(const FFMatrix& o) const;
    FFMatrix scaled(uint32_t c) const;
    FFMatrix transpose() const;
    FFMatrix pow(size_t k) const;

    FFVec apply(const FFVec& v) const;

    FFMatrix hstack(const FFMatrix& o) const;
    FFMatrix vstack(const FFMatrix& o) const;
    FFMatrix submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const;

    bool is_zero() const;
    bool is_identity() const;
    uint32_t trace() const;
    std::optional<FFMatrix> inverse() const;

    bool operator==(const FFMatrix& o) const {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const FFMatrix& o) const { return !(*this == o); }
    // Total order used for canonical sorting of results.
    bool operator<(const FFMatrix& o) const;

    std::string to_string() const;

private:
    uint32_t p_ = 2;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint32_t> a_;
};

struct RrefResult {
    FFMatrix mat;
    std::vector<size_t> pivots;
    size_t rank = 0;
};

RrefResult rref(const FFMatrix& m);

// A subspace of F_p^n stored as a reduced-row-echelon basis, so equality of
// subspaces is structural equality of the representation.
class Subspace {
public:
    Subspace() = default;
    Subspace(uint32_t p, size_t ambient_dim);  // the zero subspace

    static Subspace from_spanning_rows(const FFMatrix& rows);
    static Subspace full(uint32_t p, size_t n);

    const FFMatrix& basis() const { return basis_; }
    size_t dim() const { return basis_.rows(); }
    size_t ambient_dim() const { return ambient_; }
    uint32_t modulus() const { return p_; }

    // Residue of v after reduction against the basis; zero iff v is a member.
    FFVec reduce(const FFVec& v) const;
    bool contains(const FFVec& v) const;
    bool is_subset_of(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    bool operator==(const Subspace& o) const {
        return p_ == o.p_ && ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const;

private:
    uint32_t p_ = 2;
    size_t ambient_ = 0;
    FFMatrix basis_;  // dim x ambient, reduced row echelon, full row rank
};

// Column space of m, as a subspace of F_p^rows.
Subspace image_basis(const FFMatrix& m);
// {x : m x = 0}, as a subspace of F_p^cols.
Subspace kernel_basis(const FFMatrix& m);

// Some x with m x = b, or nullopt when the system is unsolvable.
std::optional<FFVec> solve(const FFMatrix& m, const FFVec& b);
// Columnwise solve of A X = B.
std::optional<FFMatrix> solve_matrix(const FFMatrix& a, const FFMatrix& b);

// Unit-vector representatives of a complement of the given subspace: the
// standard basis vectors at the non-pivot coordinates of its rref basis.
std::vector<FFVec> complement_reps(const Subspace& s);

// Projection q : F^n -> F^(n-d) killing exactly the subspace w, with a
// section s satisfying q s = id.
struct QuotientMaps {
    FFMatrix q;
    FFMatrix s;
};
QuotientMaps quotient_maps(const Subspace& w);

// Base-p odometer over coefficient tuples; returns false after wrapping to
// the all-zero tuple. Start from all zeros to visit every tuple once.
bool next_tuple(FFVec& t, uint32_t p);

}  // namespace detmor
