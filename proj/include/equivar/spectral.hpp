#pragma once

#include <map>
#include <vector>

#include "equivar/double_complex.hpp"

namespace equivar {

/// I filters by simplicial degree ("from below"): entry (p, q) has p the
/// simplicial degree. II filters by group degree ("from left"): p is the
/// group degree. Either way d_r : (p, q) -> (p + r, q - r + 1).
enum class SpectralKind { I, II };

struct SpectralPage {
    SpectralKind kind;
    int r = 0;
    /// Entry dims for every grid position with p + q <= degree cap.
    std::map<std::pair<int, int>, std::size_t> entry_dim;
    /// Rank of d_r out of (p, q); keys as in entry_dim.
    std::map<std::pair<int, int>, std::size_t> diff_rank;

    std::size_t dim(int p, int q) const {
        auto it = entry_dim.find({p, q});
        return it == entry_dim.end() ? 0 : it->second;
    }
    std::size_t rank_out(int p, int q) const {
        auto it = diff_rank.find({p, q});
        return it == diff_rank.end() ? 0 : it->second;
    }
    bool all_differentials_zero() const {
        for (const auto& [key, rk] : diff_rank)
            if (rk != 0) return false;
        return true;
    }
};

/// Page index from which nothing can move any further.
int stable_page(const DoubleComplex& dc);

/// Pages E_2 .. E_{r_max} with entry dims and differential ranks, computed by
/// the approximate-cycle subquotient formula for the chosen filtration.
std::vector<SpectralPage> spectral_pages(const DoubleComplex& dc, SpectralKind kind,
                                         int r_max);

/// E_infinity, realized as the stable page.
SpectralPage infinity_page(const DoubleComplex& dc, SpectralKind kind);

}  // namespace equivar
