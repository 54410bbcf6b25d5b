#include "equivar/engine.hpp"

#include "equivar/cohomology.hpp"
#include "equivar/double_complex.hpp"

namespace equivar {

KrasnovResult krasnov_test(const InvolutiveComplex& ic) {
    ic.require_regular("krasnov_test");
    KrasnovResult out;
    out.lhs = Mod2Cohomology(fixed_subcomplex(ic).complex).total_dim();

    const SimplicialComplex& k = ic.complex();
    Mod2Cohomology hk(k);
    for (int q = 0; q <= k.dim(); ++q) {
        gf2::BitMatrix g = induced_map_mod2(k, hk, k, hk, ic.involution(), q);
        out.rhs += group_cohomology_dims(g).second;
    }
    out.degenerate = out.lhs == out.rhs;
    return out;
}

ComponentMapResult component_map_rank(const InvolutiveComplex& ic, int degree) {
    ic.require_regular("component_map_rank");
    require(degree >= 0, errc::window_too_small, "degree must be nonnegative");
    FixedSubcomplex fixed = fixed_subcomplex(ic);
    require(fixed.complex.total_simplices() > 0, errc::empty_fixed_set,
            "component map needs a nonempty fixed part");

    ComponentMapResult out;
    out.s = fixed.complex.component_count();
    DoubleComplex dc(ic, degree + 1);
    SpectralPage inf = infinity_page(dc, SpectralKind::I);
    out.image_dim = inf.dim(0, degree);
    out.surjective = out.image_dim == out.s;
    return out;
}

ObstructionReport brauer_obstruction(const InvolutiveComplex& ic) {
    ic.require_regular("brauer_obstruction");
    FixedSubcomplex fixed = fixed_subcomplex(ic);
    require(fixed.complex.total_simplices() > 0, errc::empty_fixed_set,
            "obstruction report needs a nonempty fixed part");

    ObstructionReport out;
    out.s = fixed.complex.component_count();

    QuotientComplex quotient = quotient_complex(ic);
    std::vector<int> embed(fixed.complex.vertex_count());
    for (int v = 0; v < fixed.complex.vertex_count(); ++v)
        embed[v] = quotient.vertex_orbit[fixed.vertex_in_parent[v]];
    gf2::BitMatrix istar =
        induced_map_mod2(fixed.complex, quotient.complex, embed, 3);
    out.dim_ker_istar = istar.cols() - gf2::rank(istar);

    DoubleComplex dc(ic, 3);
    std::vector<SpectralPage> pages = spectral_pages(dc, SpectralKind::I, 3);
    out.dim_im_d2_11 = pages[0].rank_out(1, 1);
    out.dim_ker_d3_02 = pages[1].dim(0, 2) - pages[1].rank_out(0, 2);

    SpectralPage inf = infinity_page(dc, SpectralKind::I);
    require(inf.dim(0, 2) == out.dim_ker_d3_02, errc::internal,
            "stable corner entry disagrees with ker d_3^{0,2}");
    out.surjective = out.dim_ker_d3_02 == out.s;
    return out;
}

}  // namespace equivar
