#include "equivar/surface.hpp"

#include <algorithm>
#include <string>

#include "equivar/cohomology.hpp"
#include "equivar/double_complex.hpp"
#include "equivar/rational.hpp"

namespace equivar {

void SurfaceCohomologyProfile::validate() const {
    require(b1_mod2 >= 0 && b2 >= 0 && h2_mod2 >= 0 && h2G_mod2 >= 0 &&
                b2_plus >= 0 && s >= 0 && total_fixed_betti >= 0,
            errc::inconsistent_inputs, "profile entries must be nonnegative");
    require(h2G_mod2 <= h2_mod2, errc::inconsistent_inputs,
            "invariant part exceeds H^2");
    require(b2_plus <= b2, errc::inconsistent_inputs, "(b2)_+ exceeds b2");
}

void HodgeInput::validate() const {
    require(h20 >= 0 && h11_minus >= 0 && rho_plus >= 0, errc::inconsistent_inputs,
            "Hodge entries must be nonnegative");
    require(rho_plus <= h11_minus, errc::inconsistent_inputs,
            "rho_+ exceeds h^{1,1}_-");
}

std::vector<long long> etale_dims_formula(const SurfaceCohomologyProfile& p,
                                          int up_to) {
    p.validate();
    require(up_to >= 4, errc::hypothesis_violation,
            "etale dims are reported at least through degree 4");
    const long long d3 = 2 * p.h2G_mod2 - p.h2_mod2 + 2 * p.b1_mod2 + 1;
    std::vector<long long> dims(up_to + 1);
    dims[0] = 1;
    dims[1] = p.b1_mod2 + 1;
    dims[2] = p.h2G_mod2 + p.b1_mod2 + 1;
    dims[3] = d3;
    for (int k = 4; k <= up_to; ++k) dims[k] = d3 + 1;
    for (long long d : dims)
        require(d >= 0, errc::hypothesis_violation,
                "negative dimension; profile violates the formula hypotheses");
    return dims;
}

long long brauer_dim_kummer(long long h2_et, long long pic_mod2) {
    require(h2_et >= 0 && pic_mod2 >= 0, errc::inconsistent_inputs,
            "dimensions must be nonnegative");
    require(pic_mod2 <= h2_et, errc::inconsistent_inputs,
            "Picard part exceeds the etale H^2");
    return h2_et - pic_mod2;
}

BrauerRoutes brauer_dim_surface(const SurfaceCohomologyProfile& p,
                                const HodgeInput& h) {
    p.validate();
    h.validate();
    require(p.s >= 1, errc::hypothesis_violation,
            "the formulas assume a real point (s >= 1)");

    BrauerRoutes out;
    out.via_04 = 2 * p.s - 1 + h.h20 + h.h11_minus - h.rho_plus;

    require((p.total_fixed_betti + p.b2) % 2 == 0, errc::inconsistent_inputs,
            "dim H^*(X(R)) + b2 must be even");
    out.via_221 = (p.total_fixed_betti + p.b2) / 2 - h.rho_plus;

    const long long b2_minus = h.h20 + h.h11_minus;
    const long long chi = 2 + p.b2 - 2 * b2_minus;
    out.via_223 = (p.total_fixed_betti + chi) / 2 - 1 + b2_minus - h.rho_plus;

    require(out.via_04 == out.via_221 && out.via_221 == out.via_223,
            errc::route_mismatch,
            "routes disagree: " + std::to_string(out.via_04) + " / " +
                std::to_string(out.via_221) + " / " + std::to_string(out.via_223));
    require(out.via_04 >= 0, errc::inconsistent_inputs, "negative Brauer dimension");
    return out;
}

long long lefschetz_euler(long long b2_plus, long long b2) {
    require(b2_plus >= 0 && b2_plus <= b2, errc::inconsistent_inputs,
            "(b2)_+ must lie between 0 and b2");
    return 2 + 2 * b2_plus - b2;
}

EnriquesFormulaResult enriques_formulas(const EnriquesLatticeInvariants& inv) {
    require(inv.both_liftings_real, errc::formula_not_applicable,
            "the formulas are proven only when both liftings have real points");
    require(inv.r_theta >= 0 && inv.a_theta >= 0, errc::constraint_violation,
            "r and a must be nonnegative");
    require((inv.r_theta - inv.a_theta) % 2 == 0, errc::constraint_violation,
            "r and a must have equal parity");
    require(inv.alpha_sigma == 0 || inv.alpha_sigma == 1, errc::constraint_violation,
            "alpha must be 0 or 1");
    require((inv.delta1 == 0 || inv.delta1 == 1) &&
                (inv.delta2 == 0 || inv.delta2 == 1),
            errc::constraint_violation, "deltas must be 0 or 1");
    require(inv.delta1 == inv.delta2, errc::constraint_violation,
            "the two deltas must coincide");
    require(inv.dim_h_minus >= 0 && inv.dim_hperp_cap >= 0,
            errc::constraint_violation, "lattice dimensions must be nonnegative");

    const long long max_term =
        std::max<long long>(1 - inv.alpha_sigma, (inv.delta1 + inv.delta2) / 2);

    EnriquesFormulaResult out;
    out.b_prime = inv.r_theta - inv.a_theta + max_term;
    out.beta = max_term;
    out.b = out.b_prime + out.beta;
    out.s = 1 + (inv.r_theta - inv.a_theta) / 2 + max_term;
    out.s_nor = 1 + inv.alpha_sigma * (inv.delta1 + inv.delta2 - 1) +
                inv.dim_h_minus - inv.dim_hperp_cap;
    out.s_or = out.s - out.s_nor;
    out.dim_2br = 2 * out.s - 1;

    require(out.b == 2 * out.s - 2, errc::internal, "b != 2s - 2");
    require(out.b_prime >= 0 && out.b >= 0 && out.s >= 1 && out.s_nor >= 0 &&
                out.s_or >= 0,
            errc::negative_output,
            "inadmissible invariant combination yields negative counts");
    require(out.s_nor <= out.s, errc::negative_output,
            "more non-orientable components than components");

    if (inv.expected_s_nor && *inv.expected_s_nor != out.s_nor)
        fail(errc::inconsistent_inputs, "supplied s_nor does not match the formulas");
    if (inv.expected_s_or && *inv.expected_s_or != out.s_or)
        fail(errc::inconsistent_inputs, "supplied s_or does not match the formulas");
    return out;
}

EnriquesBoundsResult enriques_brauer_bounds(long long b, int epsilon, long long s,
                                            bool real_nonempty) {
    require(epsilon == 0 || epsilon == 1, errc::constraint_violation,
            "epsilon must be 0 or 1");
    require(b >= 0 && s >= 0, errc::constraint_violation,
            "invariants must be nonnegative");

    EnriquesBoundsResult out;
    out.bound_0_7_ok = b >= 2 * s - 2;
    require(out.bound_0_7_ok, errc::bound_violation,
            "b < 2s - 2 cannot occur; inputs are inconsistent");
    out.exact_available = real_nonempty;
    out.dim_2br = real_nonempty ? b + epsilon : 2 * s - 2 + epsilon;
    out.bound_0_8_ok = out.dim_2br >= 2 * s - 2 + epsilon;
    out.bound_0_6iii_ok = out.dim_2br >= 2 * s - 1;
    return out;
}

CrossCheckReport cross_check_surface(const InvolutiveComplex& ic, const HodgeInput& h) {
    ic.require_regular("cross_check_surface");
    h.validate();
    const SimplicialComplex& k = ic.complex();

    CrossCheckReport report;
    report.dim_four = k.dim() == 4;

    FixedSubcomplex fixed = fixed_subcomplex(ic);
    report.fixed_nonempty = fixed.complex.total_simplices() > 0;

    QuotientComplex quotient = quotient_complex(ic);
    auto qdims = mod2_cohomology_dims(quotient.complex);
    auto dim_at = [&](int q) {
        return q < static_cast<int>(qdims.size()) ? qdims[q] : 0;
    };
    report.h1_quotient_zero = dim_at(1) == 0;
    report.h3_quotient_zero = dim_at(3) == 0;

    if (!report.dim_four || !report.fixed_nonempty || !report.h1_quotient_zero ||
        !report.h3_quotient_zero) {
        std::string failed;
        if (!report.dim_four) failed += " dim-four";
        if (!report.fixed_nonempty) failed += " fixed-nonempty";
        if (!report.h1_quotient_zero) failed += " h1-quotient-zero";
        if (!report.h3_quotient_zero) failed += " h3-quotient-zero";
        fail(errc::hypothesis_violation, "failed hypothesis checks:" + failed);
    }

    // profile from the engine
    Mod2Cohomology hk(k);
    gf2::BitMatrix g2 = induced_map_mod2(k, hk, k, hk, ic.involution(), 2);
    for (std::size_t v = 0; v < g2.rows(); ++v) g2.flip(v, v);  // 1 + g
    exact::RationalHomology rational = exact::rational_homology_with_trace(ic);

    report.profile.b1_mod2 = static_cast<long long>(hk.dim(1));
    report.profile.h2_mod2 = static_cast<long long>(hk.dim(2));
    report.profile.h2G_mod2 =
        static_cast<long long>(hk.dim(2) - gf2::rank(g2));
    report.profile.b2 = rational.betti[2];
    require((rational.betti[2] + rational.trace[2]) % 2 == 0, errc::internal,
            "trace parity");
    report.profile.b2_plus = (rational.betti[2] + rational.trace[2]) / 2;
    report.profile.s = static_cast<long long>(fixed.complex.component_count());
    report.profile.total_fixed_betti =
        static_cast<long long>(Mod2Cohomology(fixed.complex).total_dim());

    // engine vs formulas, including the stabilized degrees
    const int cap = k.dim() + 2;
    DoubleComplex dc(ic, cap);
    auto engine = total_equivariant_dims(dc, cap);
    report.engine_dims.assign(engine.begin(), engine.end());
    report.formula_dims = etale_dims_formula(report.profile, cap);
    for (int n = 0; n <= cap; ++n) {
        if (report.formula_dims[n] != report.engine_dims[n])
            fail(errc::inconsistent_inputs,
                 "formula/engine mismatch at degree " + std::to_string(n) + ": " +
                     std::to_string(report.formula_dims[n]) + " vs " +
                     std::to_string(report.engine_dims[n]));
    }
    require(report.formula_dims[cap] == report.profile.total_fixed_betti,
            errc::inconsistent_inputs,
            "stabilized value does not match the fixed part");

    report.routes = brauer_dim_surface(report.profile, h);

    report.chi_formula = lefschetz_euler(report.profile.b2_plus, report.profile.b2);
    report.chi_fixed = fixed.complex.euler_characteristic();
    require(report.chi_formula == report.chi_fixed, errc::inconsistent_inputs,
            "Euler characteristic of the fixed part disagrees with the formula");
    return report;
}

}  // namespace equivar
