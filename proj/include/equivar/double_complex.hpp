#pragma once

#include <utility>
#include <vector>

#include "equivar/cohomology.hpp"
#include "equivar/simplicial.hpp"

namespace equivar {

/// First-quadrant, column-periodic double complex of an involutive complex:
/// cell (i, j) is C^j(K; F2), horizontal maps are 1+g (one map per row, every
/// column identical), vertical maps are the simplicial coboundary. Columns
/// are truncated at window() = degree_cap() + 2.
class DoubleComplex {
public:
    DoubleComplex(const InvolutiveComplex& ic, int degree_cap);

    int degree_cap() const { return n_max_; }
    int window() const { return window_; }
    /// Dimension of the underlying complex (-1 when empty).
    int vertical_dim() const { return dim_; }

    std::size_t cell_dim(int i, int j) const {
        return i >= 0 && i <= window_ && j >= 0 && j <= dim_ ? cdim_[j] : 0;
    }
    const gf2::BitMatrix& coboundary(int j) const { return d_[j]; }
    const gf2::BitMatrix& horizontal(int j) const { return h_[j]; }

    struct Block {
        int i, j;
        std::size_t offset, size;
    };
    /// Blocks of the total space T^n, ordered by vertical degree ascending.
    const std::vector<Block>& blocks(int n) const;
    std::size_t total_dim(int n) const;
    /// Total differential T^n -> T^{n+1}; available for n <= degree_cap() + 1.
    const gf2::BitMatrix& total_differential(int n) const;

private:
    int n_max_ = 0;
    int window_ = 0;
    int dim_ = -1;
    std::vector<std::size_t> cdim_;
    std::vector<gf2::BitMatrix> d_;
    std::vector<gf2::BitMatrix> h_;
    std::vector<std::vector<Block>> blocks_;
    std::vector<gf2::BitMatrix> total_d_;
};

/// Requires a regular action; grid covers j <= dim K, i <= degree_cap + 2.
DoubleComplex build_double_complex(const InvolutiveComplex& ic, int degree_cap);

/// Exact dimensions of H^0 .. H^{up_to} of the total complex.
std::vector<std::size_t> total_equivariant_dims(const DoubleComplex& dc, int up_to);

/// (h0, hp) of the Z/2-module described by an involution matrix over F2:
/// h0 = dim ker(1+g), hp = dim ker(1+g) - rank(1+g) for every p >= 1.
std::pair<std::size_t, std::size_t> group_cohomology_dims(const gf2::BitMatrix& g);

}  // namespace equivar
