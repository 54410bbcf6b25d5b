#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "equivar/errors.hpp"

namespace equivar::gf2 {

/// Dense bit-packed matrix over F2, row-major 64-bit words.
/// Bits past `cols` in the last word of a row are kept zero.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_(words_for(cols)),
          bits_(rows * words_for(cols), 0) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t r, std::size_t c) const {
        return (row(r)[c >> 6] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (c & 63);
        if (v)
            row(r)[c >> 6] |= mask;
        else
            row(r)[c >> 6] &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) {
        row(r)[c >> 6] ^= std::uint64_t(1) << (c & 63);
    }

    std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
    const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }

    void xor_rows(std::size_t dst, std::size_t src);
    /// dst ^= other.row(src); both matrices must have equal cols.
    void xor_row_from(std::size_t dst, const BitMatrix& other, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);
    bool row_is_zero(std::size_t r) const;
    /// Index of the first set bit in row r, or cols() if the row is zero.
    std::size_t row_leading(std::size_t r) const;

    bool operator==(const BitMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
    }

private:
    static std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

std::size_t rank(BitMatrix m);
BitMatrix transpose(const BitMatrix& m);
/// Matrix product over F2; a.cols() must equal b.rows().
BitMatrix mul(const BitMatrix& a, const BitMatrix& b);
/// Vertical concatenation; column counts must agree.
BitMatrix stack(const BitMatrix& top, const BitMatrix& bottom);
/// Reduced row echelon form. Zero rows are dropped; pivot columns
/// (strictly increasing) are written to *pivots when given.
BitMatrix rref(BitMatrix m, std::vector<std::size_t>* pivots = nullptr);

/// Row-space of an rref basis, the canonical form for every subspace here.
/// Two subspaces are equal iff their bases are equal bit for bit.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Span of the rows of `vectors` inside F2^{vectors.cols()}.
    static Subspace span(const BitMatrix& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const BitMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Reduce a row vector (1 x ambient) against the basis, in place.
    void reduce(BitMatrix& vec, std::size_t vec_row) const;
    bool contains_vector(const BitMatrix& vec, std::size_t vec_row) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

private:
    std::size_t ambient_ = 0;
    BitMatrix basis_;
    std::vector<std::size_t> pivots_;
};

struct Decomposition {
    Subspace kernel;  ///< {x : m x = 0} in F2^{cols}
    Subspace image;   ///< {m x}          in F2^{rows}
};

Subspace kernel(const BitMatrix& m);
Subspace image(const BitMatrix& m);
Decomposition decompose(const BitMatrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// {x : m x in target}, computed by block elimination of [m | target-basis].
Subspace preimage(const BitMatrix& m, const Subspace& target);
/// dim(a/b); requires b contained in a.
std::size_t quotient_dim(const Subspace& a, const Subspace& b);
/// Image of the subspace under x -> m x.
Subspace apply(const BitMatrix& m, const Subspace& s);

/// Canonical basis of the subquotient Z/B for nested subspaces B <= Z.
/// Representatives are in rref with pivot columns disjoint from B's, so
/// coordinates of a vector are read off its pivot bits after reduction mod B.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(const Subspace& z, const Subspace& b);

    std::size_t dim() const { return reps_.rows(); }
    std::size_t ambient_dim() const { return denominator_.ambient_dim(); }
    const BitMatrix& representatives() const { return reps_; }
    const Subspace& denominator() const { return denominator_; }

    /// Coordinates of a vector of Z in the canonical basis (1 x dim matrix).
    BitMatrix coords(const BitMatrix& vec, std::size_t vec_row) const;

private:
    Subspace denominator_;
    BitMatrix reps_;
    std::vector<std::size_t> rep_pivots_;
};

/// Matrix of the map Z_src/B_src -> Z_tgt/B_tgt induced by x -> m x.
/// Requires m(Z_src) <= Z_tgt + B_tgt.
BitMatrix induced_matrix(const BitMatrix& m, const Subquotient& src, const Subquotient& tgt);

}  // namespace equivar::gf2
