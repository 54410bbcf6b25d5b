#pragma once

#include "equivar/simplicial.hpp"
#include "equivar/spectral.hpp"

namespace equivar {

struct KrasnovResult {
    bool degenerate = false;
    std::size_t lhs = 0;  ///< total mod-2 Betti of the fixed part
    std::size_t rhs = 0;  ///< dim H^1(G; H^*(K; F2))
};

/// Degeneration criterion for spectral sequence II: the fixed part's total
/// Betti number against the group cohomology of H^*(K; F2).
KrasnovResult krasnov_test(const InvolutiveComplex& ic);

struct ComponentMapResult {
    std::size_t image_dim = 0;  ///< dim of the stable corner entry (0, n)
    std::size_t s = 0;          ///< components of the fixed part
    bool surjective = false;
};

/// Rank of the evaluation map onto the fixed components in the given degree,
/// realized as the stable entry I_inf^{0,n}. Requires a nonempty fixed part.
ComponentMapResult component_map_rank(const InvolutiveComplex& ic, int degree);

struct ObstructionReport {
    std::size_t s = 0;
    std::size_t dim_ker_istar = 0;   ///< ker(i*: H^3(K/G) -> H^3(K^G))
    std::size_t dim_im_d2_11 = 0;    ///< rank of d_2 out of (1,1), kind I
    std::size_t dim_ker_d3_02 = 0;   ///< kernel of d_3 out of (0,2) on page 3
    bool surjective = false;
};

/// Obstruction data for surjectivity of the degree-2 component map.
ObstructionReport brauer_obstruction(const InvolutiveComplex& ic);

}  // namespace equivar
