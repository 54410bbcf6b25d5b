#include "equivar/double_complex.hpp"

#include <bit>

namespace equivar {

namespace {

void embed_block(gf2::BitMatrix& big, const gf2::BitMatrix& small,
                 std::size_t row_offset, std::size_t col_offset) {
    for (std::size_t r = 0; r < small.rows(); ++r) {
        const std::uint64_t* words = small.row(r);
        for (std::size_t w = 0; w < small.words_per_row(); ++w) {
            std::uint64_t word = words[w];
            while (word) {
                unsigned bit = std::countr_zero(word);
                word &= word - 1;
                big.set(row_offset + r, col_offset + w * 64 + bit, true);
            }
        }
    }
}

}  // namespace

DoubleComplex::DoubleComplex(const InvolutiveComplex& ic, int degree_cap) {
    ic.require_regular("build_double_complex");
    require(degree_cap >= 0, errc::window_too_small, "degree cap must be nonnegative");
    const SimplicialComplex& k = ic.complex();
    n_max_ = degree_cap;
    window_ = degree_cap + 2;
    dim_ = k.dim();

    cdim_.resize(dim_ + 1);
    d_.resize(dim_ + 1);
    h_.resize(dim_ + 1);
    for (int j = 0; j <= dim_; ++j) {
        cdim_[j] = k.count(j);
        d_[j] = coboundary_matrix(k, j);
        gf2::BitMatrix p = cochain_map(k, k, ic.involution(), j);
        for (std::size_t v = 0; v < cdim_[j]; ++v) p.flip(v, v);  // 1 + g
        h_[j] = std::move(p);
    }

    const int top_degree = n_max_ + 2;
    blocks_.resize(top_degree + 1);
    for (int n = 0; n <= top_degree; ++n) {
        std::size_t offset = 0;
        for (int j = 0; j <= dim_ && j <= n; ++j) {
            int i = n - j;
            if (i > window_) continue;
            blocks_[n].push_back({i, j, offset, cdim_[j]});
            offset += cdim_[j];
        }
    }

    total_d_.resize(n_max_ + 2);
    for (int n = 0; n <= n_max_ + 1; ++n) {
        gf2::BitMatrix dn(total_dim(n + 1), total_dim(n));
        for (const Block& src : blocks_[n]) {
            for (const Block& tgt : blocks_[n + 1]) {
                if (tgt.i == src.i && tgt.j == src.j + 1)
                    embed_block(dn, d_[src.j], tgt.offset, src.offset);
                else if (tgt.i == src.i + 1 && tgt.j == src.j)
                    embed_block(dn, h_[src.j], tgt.offset, src.offset);
            }
        }
        total_d_[n] = std::move(dn);
    }
}

const std::vector<DoubleComplex::Block>& DoubleComplex::blocks(int n) const {
    static const std::vector<Block> empty;
    if (n < 0 || n >= static_cast<int>(blocks_.size())) return empty;
    return blocks_[n];
}

std::size_t DoubleComplex::total_dim(int n) const {
    std::size_t total = 0;
    for (const Block& b : blocks(n)) total += b.size;
    return total;
}

const gf2::BitMatrix& DoubleComplex::total_differential(int n) const {
    require(n >= 0 && n < static_cast<int>(total_d_.size()), errc::window_too_small,
            "total differential outside the built window");
    return total_d_[n];
}

DoubleComplex build_double_complex(const InvolutiveComplex& ic, int degree_cap) {
    return DoubleComplex(ic, degree_cap);
}

std::vector<std::size_t> total_equivariant_dims(const DoubleComplex& dc, int up_to) {
    require(up_to >= 0 && dc.window() >= up_to + 2, errc::window_too_small,
            "requested degree exceeds the built window");
    std::vector<std::size_t> dims(up_to + 1);
    std::size_t prev_rank = 0;
    for (int n = 0; n <= up_to; ++n) {
        std::size_t rk = gf2::rank(dc.total_differential(n));
        dims[n] = dc.total_dim(n) - rk - prev_rank;
        prev_rank = rk;
    }
    return dims;
}

std::pair<std::size_t, std::size_t> group_cohomology_dims(const gf2::BitMatrix& g) {
    require(g.rows() == g.cols(), errc::not_an_involution,
            "involution matrix must be square");
    require(gf2::mul(g, g) == gf2::BitMatrix::identity(g.rows()),
            errc::not_an_involution, "matrix squared is not the identity");
    gf2::BitMatrix h = g;
    for (std::size_t v = 0; v < h.rows(); ++v) h.flip(v, v);
    std::size_t rk = gf2::rank(h);
    std::size_t h0 = h.rows() - rk;
    return {h0, h0 - rk};
}

}  // namespace equivar
