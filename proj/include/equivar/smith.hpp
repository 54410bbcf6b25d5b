#pragma once

#include <vector>

#include "equivar/cohomology.hpp"
#include "equivar/simplicial.hpp"

namespace equivar {

/// The homological Smith sequence of an involution, assembled from the
/// chain-level splitting of invariant chains. All maps are matrices in the
/// canonical homology bases; degree n runs 0..top.
struct SmithSequence {
    int top = -1;
    std::vector<std::size_t> dim_rel;    ///< H_n(K/G, K^G; F2)
    std::vector<std::size_t> dim_fixed;  ///< H_n(K^G; F2)
    std::vector<std::size_t> dim_k;      ///< H_n(K; F2)
    std::vector<std::size_t> dim_quot;   ///< H_n(K/G; F2)

    std::vector<gf2::BitMatrix> i_rel;        ///< H_n(rel) -> H_n(K), transfer
    std::vector<gf2::BitMatrix> i_fixed;      ///< H_n(fixed) -> H_n(K)
    std::vector<gf2::BitMatrix> rho;          ///< H_n(K) -> H_n(rel)
    std::vector<gf2::BitMatrix> delta_rel;    ///< H_n(rel) -> H_{n-1}(rel)
    std::vector<gf2::BitMatrix> delta_fixed;  ///< H_n(rel) -> H_{n-1}(fixed)
    std::vector<gf2::BitMatrix> g_star;       ///< g_* on H_n(K)
    std::vector<gf2::BitMatrix> j_quot;       ///< H_n(K/G) -> H_n(rel)
    std::vector<gf2::BitMatrix> pair_bound;   ///< connecting H_n(rel) -> H_{n-1}(fixed)

    gf2::BitMatrix i_full(int n) const;      ///< [i_rel | i_fixed]
    gf2::BitMatrix delta_full(int n) const;  ///< [delta_rel; delta_fixed]
};

SmithSequence build_smith_sequence(const InvolutiveComplex& ic);

/// ker = im at every node, plus the vanishing compositions.
bool smith_exact(const SmithSequence& sm);
/// i_n(rho_n oplus 0) = 1 + g on H_n(K), entrywise.
bool smith_transfer_identity(const SmithSequence& sm);
/// The fixed component of delta_n equals the connecting map of the pair.
bool smith_boundary_identity(const SmithSequence& sm);

struct SmithReport {
    std::vector<std::size_t> dim_im_i;       ///< per degree
    std::vector<std::size_t> dim_invariant;  ///< dim H_n(K)^G
    std::vector<std::size_t> composite_dim;  ///< image through the quotient route
    std::vector<bool> saturated;             ///< composite image vanishes
    bool all_saturated = true;
    bool image_inside_invariants = true;     ///< Im i_n <= H_n(K)^G, all n
};

SmithReport image_criterion(const SmithSequence& sm);

struct HarnackResult {
    std::size_t lhs = 0;  ///< total Betti of the fixed part
    std::size_t rhs = 0;  ///< 2 dim H_*(K)^G - dim H_*(K)
    long long slack = 0;
};

HarnackResult harnack_thom(const InvolutiveComplex& ic);

struct LefschetzResult {
    long long lefschetz_number = 0;
    long long chi_fixed = 0;
    bool consistent = false;
    /// 2 + 2(b2)_+ - b2, emitted for 4-dimensional models with b1 = 0.
    bool specialized_available = false;
    long long chi_from_b2 = 0;
};

/// Works on any involutive complex; regularizes internally so the fixed
/// subcomplex triangulates the fixed point set.
LefschetzResult lefschetz_check(const InvolutiveComplex& ic);

}  // namespace equivar
