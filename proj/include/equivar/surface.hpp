#pragma once

#include <optional>
#include <vector>

#include "equivar/simplicial.hpp"

namespace equivar {

/// Topological side of a real surface: everything the engine can compute
/// from a triangulated model, or a caller can supply directly.
struct SurfaceCohomologyProfile {
    long long b1_mod2 = 0;           ///< dim H^1(X(C); F2)
    long long b2 = 0;                ///< dim H^2(X(C); Q)
    long long h2_mod2 = 0;           ///< dim H^2(X(C); F2)
    long long h2G_mod2 = 0;          ///< dim H^2(X(C); F2)^G
    long long b2_plus = 0;           ///< dim H^2(X(C); C)^G
    long long s = 0;                 ///< components of X(R)
    long long total_fixed_betti = 0; ///< dim H^*(X(R); F2)

    void validate() const;
};

/// Hodge-side inputs; never computed here.
struct HodgeInput {
    long long h20 = 0;        ///< dim H^{2,0}
    long long h11_minus = 0;  ///< dim H^{1,1}_-
    long long rho_plus = 0;   ///< rank of the invariant Picard part

    void validate() const;
};

/// Etale dimension formulas for a surface with a real point and vanishing
/// H^3 of the quotient; degrees 0..up_to, constant from degree 4 on.
std::vector<long long> etale_dims_formula(const SurfaceCohomologyProfile& p,
                                          int up_to = 4);

/// dim of the 2-torsion Brauer part out of the Kummer sequence bookkeeping.
long long brauer_dim_kummer(long long h2_et, long long pic_mod2);

struct BrauerRoutes {
    long long via_04 = 0;   ///< 2s - 1 + h20 + h11- - rho+
    long long via_221 = 0;  ///< T/2 + b2/2 - rho+
    long long via_223 = 0;  ///< T/2 + chi/2 - 1 + (b2)_- - rho+
};

/// All three routes; they must agree or the inputs are inconsistent.
BrauerRoutes brauer_dim_surface(const SurfaceCohomologyProfile& p,
                                const HodgeInput& h);

/// chi(X(R)) = 2 + 2(b2)_+ - b2.
long long lefschetz_euler(long long b2_plus, long long b2);

struct EnriquesLatticeInvariants {
    long long r_theta = 0;
    long long a_theta = 0;
    int alpha_sigma = 0;  // 0 or 1
    int delta1 = 0;       // 0 or 1, must equal delta2
    int delta2 = 0;
    long long dim_h_minus = 0;
    long long dim_hperp_cap = 0;
    std::optional<long long> expected_s_or;   ///< optional cross-check
    std::optional<long long> expected_s_nor;  ///< optional cross-check
    bool both_liftings_real = true;
};

struct EnriquesFormulaResult {
    long long b_prime = 0;
    long long beta = 0;
    long long b = 0;
    long long s_nor = 0;
    long long s = 0;
    long long s_or = 0;
    long long dim_2br = 0;
};

EnriquesFormulaResult enriques_formulas(const EnriquesLatticeInvariants& inv);

struct EnriquesBoundsResult {
    bool exact_available = false;
    long long dim_2br = 0;  ///< exact value, or the lower bound 2s-2+eps
    bool bound_0_7_ok = false;
    bool bound_0_8_ok = false;
    bool bound_0_6iii_ok = false;
};

EnriquesBoundsResult enriques_brauer_bounds(long long b, int epsilon, long long s,
                                            bool real_nonempty);

struct CrossCheckReport {
    bool dim_four = false;
    bool fixed_nonempty = false;
    bool h1_quotient_zero = false;
    bool h3_quotient_zero = false;

    SurfaceCohomologyProfile profile;
    std::vector<long long> formula_dims;  ///< degrees 0..dim+2
    std::vector<long long> engine_dims;
    BrauerRoutes routes;
    long long chi_formula = 0;
    long long chi_fixed = 0;
};

/// Full pipeline on a 4-dimensional model: build the profile from the engine,
/// evaluate the closed forms, and require degree-by-degree agreement.
/// Throws hypothesis_violation when the preconditions fail and
/// inconsistent_inputs (with a degree-level diff) on any mismatch.
CrossCheckReport cross_check_surface(const InvolutiveComplex& ic, const HodgeInput& h);

}  // namespace equivar
