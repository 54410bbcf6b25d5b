#include "equivar/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace equivar::gf2 {

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::xor_rows(std::size_t dst, std::size_t src) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = row(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
}

void BitMatrix::xor_row_from(std::size_t dst, const BitMatrix& other, std::size_t src) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = other.row(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* ra = row(a);
    std::uint64_t* rb = row(b);
    for (std::size_t w = 0; w < words_; ++w) std::swap(ra[w], rb[w]);
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    const std::uint64_t* p = row(r);
    for (std::size_t w = 0; w < words_; ++w)
        if (p[w]) return false;
    return true;
}

std::size_t BitMatrix::row_leading(std::size_t r) const {
    const std::uint64_t* p = row(r);
    for (std::size_t w = 0; w < words_; ++w)
        if (p[w]) return w * 64 + std::countr_zero(p[w]);
    return cols_;
}

std::size_t rank(BitMatrix m) {
    std::size_t r = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        m.swap_rows(r, pivot);
        for (std::size_t i = pivot + 1; i < rows; ++i)
            if (m.get(i, c)) m.xor_rows(i, r);
        ++r;
    }
    return r;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const std::uint64_t* p = m.row(i);
        for (std::size_t w = 0; w < m.words_per_row(); ++w) {
            std::uint64_t word = p[w];
            while (word) {
                unsigned b = std::countr_zero(word);
                word &= word - 1;
                t.set(w * 64 + b, i, true);
            }
        }
    }
    return t;
}

BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
    require(a.cols() == b.rows(), errc::dimension_mismatch,
            "matrix product shape mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const std::uint64_t* p = a.row(i);
        for (std::size_t w = 0; w < a.words_per_row(); ++w) {
            std::uint64_t word = p[w];
            while (word) {
                unsigned bit = std::countr_zero(word);
                word &= word - 1;
                out.xor_row_from(i, b, w * 64 + bit);
            }
        }
    }
    return out;
}

BitMatrix stack(const BitMatrix& top, const BitMatrix& bottom) {
    require(top.cols() == bottom.cols(), errc::dimension_mismatch,
            "stack column mismatch");
    BitMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i) out.xor_row_from(i, top, i);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        out.xor_row_from(top.rows() + i, bottom, i);
    return out;
}

BitMatrix rref(BitMatrix m, std::vector<std::size_t>* pivots) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        m.swap_rows(r, pivot);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m.get(i, c)) m.xor_rows(i, r);
        piv.push_back(c);
        ++r;
    }
    BitMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i) out.xor_row_from(i, m, i);
    if (pivots) *pivots = std::move(piv);
    return out;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = BitMatrix(0, ambient_dim);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = BitMatrix::identity(ambient_dim);
    s.pivots_.resize(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_[i] = i;
    return s;
}

Subspace Subspace::span(const BitMatrix& vectors) {
    Subspace s;
    s.ambient_ = vectors.cols();
    s.basis_ = rref(vectors, &s.pivots_);
    return s;
}

void Subspace::reduce(BitMatrix& vec, std::size_t vec_row) const {
    require(vec.cols() == ambient_, errc::dimension_mismatch,
            "reduce: ambient mismatch");
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        if (vec.get(vec_row, pivots_[i])) vec.xor_row_from(vec_row, basis_, i);
}

bool Subspace::contains_vector(const BitMatrix& vec, std::size_t vec_row) const {
    BitMatrix tmp(1, ambient_);
    tmp.xor_row_from(0, vec, vec_row);
    reduce(tmp, 0);
    return tmp.row_is_zero(0);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_) return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains_vector(other.basis(), i)) return false;
    return true;
}

Subspace kernel(const BitMatrix& m) {
    std::vector<std::size_t> pivots;
    BitMatrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::size_t nfree = m.cols() - pivots.size();
    BitMatrix basis(nfree, m.cols());
    std::size_t k = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        basis.set(k, c, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (r.get(i, c)) basis.set(k, pivots[i], true);
        ++k;
    }
    return Subspace::span(basis);
}

Subspace image(const BitMatrix& m) { return Subspace::span(transpose(m)); }

Decomposition decompose(const BitMatrix& m) { return {kernel(m), image(m)}; }

Subspace sum(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim() == b.ambient_dim(), errc::dimension_mismatch,
            "sum: ambient mismatch");
    return Subspace::span(stack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim() == b.ambient_dim(), errc::dimension_mismatch,
            "intersect: ambient mismatch");
    const std::size_t n = a.ambient_dim();
    // Zassenhaus: echelonize [A|A; B|0]; rows with zero left half carry the
    // intersection in their right half.
    BitMatrix block(a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t w = 0; w < a.basis().words_per_row(); ++w) {
            std::uint64_t word = a.basis().row(i)[w];
            while (word) {
                unsigned bit = std::countr_zero(word);
                word &= word - 1;
                std::size_t c = w * 64 + bit;
                block.set(i, c, true);
                block.set(i, n + c, true);
            }
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t w = 0; w < b.basis().words_per_row(); ++w) {
            std::uint64_t word = b.basis().row(i)[w];
            while (word) {
                unsigned bit = std::countr_zero(word);
                word &= word - 1;
                block.set(a.dim() + i, w * 64 + bit, true);
            }
        }
    BitMatrix r = rref(block);
    BitMatrix right(r.rows(), n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        if (r.row_leading(i) < n) continue;
        for (std::size_t c = 0; c < n; ++c)
            if (r.get(i, n + c)) right.set(k, c, true);
        ++k;
    }
    BitMatrix kept(k, n);
    for (std::size_t i = 0; i < k; ++i) kept.xor_row_from(i, right, i);
    return Subspace::span(kept);
}

Subspace preimage(const BitMatrix& m, const Subspace& target) {
    require(target.ambient_dim() == m.rows(), errc::dimension_mismatch,
            "preimage: target must live in the codomain");
    // Solve m x = sum c_i t_i: kernel of [m | T^t], projected onto x.
    const std::size_t cols = m.cols(), d = target.dim();
    BitMatrix block(m.rows(), cols + d);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < cols; ++c)
            if (m.get(i, c)) block.set(i, c, true);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (target.basis().get(j, i)) block.set(i, cols + j, true);
    Subspace ker = kernel(block);
    BitMatrix proj(ker.dim(), cols);
    for (std::size_t i = 0; i < ker.dim(); ++i)
        for (std::size_t c = 0; c < cols; ++c)
            if (ker.basis().get(i, c)) proj.set(i, c, true);
    return Subspace::span(proj);
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim() == b.ambient_dim(), errc::dimension_mismatch,
            "quotient_dim: ambient mismatch");
    require(a.contains(b), errc::containment_violation,
            "quotient_dim: denominator not contained in numerator");
    return a.dim() - b.dim();
}

Subspace apply(const BitMatrix& m, const Subspace& s) {
    require(s.ambient_dim() == m.cols(), errc::dimension_mismatch,
            "apply: ambient mismatch");
    // rows of s.basis() times m^t, i.e. images m x for basis vectors x
    BitMatrix images(s.dim(), m.rows());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t r = 0; r < m.rows(); ++r) {
            const std::uint64_t* mr = m.row(r);
            const std::uint64_t* sr = s.basis().row(i);
            std::uint64_t acc = 0;
            for (std::size_t w = 0; w < m.words_per_row(); ++w) acc ^= mr[w] & sr[w];
            if (std::popcount(acc) & 1) images.set(i, r, true);
        }
    return Subspace::span(images);
}

Subquotient::Subquotient(const Subspace& z, const Subspace& b) {
    require(z.ambient_dim() == b.ambient_dim(), errc::dimension_mismatch,
            "subquotient: ambient mismatch");
    require(z.contains(b), errc::containment_violation,
            "subquotient: denominator not contained in numerator");
    denominator_ = b;
    BitMatrix reduced(z.dim(), z.ambient_dim());
    for (std::size_t i = 0; i < z.dim(); ++i) {
        reduced.xor_row_from(i, z.basis(), i);
        b.reduce(reduced, i);
    }
    reps_ = rref(reduced, &rep_pivots_);
}

BitMatrix Subquotient::coords(const BitMatrix& vec, std::size_t vec_row) const {
    BitMatrix tmp(1, ambient_dim());
    tmp.xor_row_from(0, vec, vec_row);
    denominator_.reduce(tmp, 0);
    BitMatrix out(1, dim());
    for (std::size_t i = 0; i < reps_.rows(); ++i) {
        if (tmp.get(0, rep_pivots_[i])) {
            out.set(0, i, true);
            tmp.xor_row_from(0, reps_, i);
        }
    }
    require(tmp.row_is_zero(0), errc::internal,
            "subquotient coords: vector not in the numerator space");
    return out;
}

BitMatrix induced_matrix(const BitMatrix& m, const Subquotient& src, const Subquotient& tgt) {
    require(src.ambient_dim() == m.cols() && tgt.ambient_dim() == m.rows(),
            errc::dimension_mismatch, "induced_matrix: ambient mismatch");
    // column j = coords of m(rep_j); matrix maps source coords to target coords
    BitMatrix out(tgt.dim(), src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j) {
        BitMatrix img(1, m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            const std::uint64_t* mr = m.row(r);
            const std::uint64_t* sr = src.representatives().row(j);
            std::uint64_t acc = 0;
            for (std::size_t w = 0; w < m.words_per_row(); ++w) acc ^= mr[w] & sr[w];
            if (std::popcount(acc) & 1) img.set(0, r, true);
        }
        BitMatrix c = tgt.coords(img, 0);
        for (std::size_t i = 0; i < tgt.dim(); ++i)
            if (c.get(0, i)) out.set(i, j, true);
    }
    return out;
}

}  // namespace equivar::gf2
