#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equivar/cohomology.hpp"
#include "equivar/double_complex.hpp"
#include "equivar/engine.hpp"
#include "equivar/fixtures.hpp"
#include "equivar/spectral.hpp"

using namespace equivar;

namespace {

std::vector<std::size_t> partial_sums(const std::vector<std::size_t>& dims, int up_to) {
    std::vector<std::size_t> out(up_to + 1, 0);
    std::size_t acc = 0;
    for (int k = 0; k <= up_to; ++k) {
        if (k < static_cast<int>(dims.size())) acc += dims[k];
        out[k] = acc;
    }
    return out;
}

std::size_t infinity_antidiagonal(const SpectralPage& page, int n) {
    std::size_t total = 0;
    for (const auto& [key, dim] : page.entry_dim)
        if (key.first + key.second == n) total += dim;
    return total;
}

}  // namespace

TEST_CASE("double complex of a point") {
    DoubleComplex dc(fixtures::by_name("point"), 4);
    CHECK(dc.vertical_dim() == 0);
    for (int i = 0; i <= dc.window(); ++i) CHECK(dc.cell_dim(i, 0) == 1);
    CHECK(gf2::rank(dc.horizontal(0)) == 0);  // 1 + g = 0
    CHECK(total_equivariant_dims(dc, 4) == std::vector<std::size_t>{1, 1, 1, 1, 1});
}

TEST_CASE("double complex of the free hexagon") {
    DoubleComplex dc(fixtures::hexagon_antipodal(), 3);
    CHECK(dc.cell_dim(0, 0) == 6);
    CHECK(dc.cell_dim(0, 1) == 6);
    CHECK(gf2::rank(dc.horizontal(0)) == 3);
    CHECK(gf2::rank(dc.horizontal(1)) == 3);
    CHECK(total_equivariant_dims(dc, 3) == std::vector<std::size_t>{1, 1, 0, 0});
}

TEST_CASE("identity involution: horizontal maps vanish, dims are partial sums") {
    for (const char* name : {"octahedron", "square", "hexagon"}) {
        InvolutiveComplex ic = fixtures::by_name(name);
        int cap = ic.complex().dim() + 3;
        DoubleComplex dc(ic, cap);
        for (int j = 0; j <= dc.vertical_dim(); ++j)
            CHECK(gf2::rank(dc.horizontal(j)) == 0);
        CHECK(total_equivariant_dims(dc, cap) ==
              partial_sums(mod2_cohomology_dims(ic.complex()), cap));
    }
}

TEST_CASE("square circle with trivial action") {
    DoubleComplex dc(fixtures::square_identity(), 4);
    CHECK(total_equivariant_dims(dc, 4) == std::vector<std::size_t>{1, 2, 2, 2, 2});
}

TEST_CASE("vertical and horizontal maps commute") {
    for (const char* name :
         {"octahedron_reflection", "hexagon_antipodal", "interval_swap"}) {
        InvolutiveComplex ic = regularize(fixtures::by_name(name));
        DoubleComplex dc(ic, 3);
        for (int j = 0; j + 1 <= dc.vertical_dim(); ++j)
            CHECK(gf2::mul(dc.coboundary(j), dc.horizontal(j)) ==
                  gf2::mul(dc.horizontal(j + 1), dc.coboundary(j)));
    }
}

TEST_CASE("group cohomology dims") {
    CHECK(group_cohomology_dims(gf2::BitMatrix::identity(3)) ==
          std::pair<std::size_t, std::size_t>{3, 3});

    gf2::BitMatrix swap(2, 2);
    swap.set(0, 1, true);
    swap.set(1, 0, true);
    CHECK(group_cohomology_dims(swap) == std::pair<std::size_t, std::size_t>{1, 0});

    CHECK(group_cohomology_dims(gf2::BitMatrix(0, 0)) ==
          std::pair<std::size_t, std::size_t>{0, 0});

    gf2::BitMatrix not_involution(2, 2);
    not_involution.set(0, 1, true);
    CHECK_THROWS_AS(group_cohomology_dims(not_involution), error);
}

TEST_CASE("window too small is reported") {
    DoubleComplex dc(fixtures::by_name("point"), 2);
    CHECK_THROWS_AS(total_equivariant_dims(dc, 3), error);
}

TEST_CASE("page two of the reflection sphere, kind I") {
    InvolutiveComplex ic = fixtures::octahedron_reflection();
    DoubleComplex dc(ic, 4);
    std::vector<SpectralPage> pages = spectral_pages(dc, SpectralKind::I, 2);
    const SpectralPage& e2 = pages[0];
    // bottom row: H^p of the quotient disk
    CHECK(e2.dim(0, 0) == 1);
    CHECK(e2.dim(1, 0) == 0);
    CHECK(e2.dim(2, 0) == 0);
    // higher rows: H^p of the fixed circle
    for (int q = 1; q <= 3; ++q) {
        CHECK(e2.dim(0, q) == 1);
        CHECK(e2.dim(1, q) == 1);
        CHECK(e2.dim(2, q) == 0);
    }
}

TEST_CASE("kind-I identification holds on every fixture") {
    for (const char* name : {"octahedron_reflection", "hexagon_antipodal",
                             "octahedron_antipodal", "interval_swap", "square"}) {
        InvolutiveComplex ic = regularize(fixtures::by_name(name));
        int cap = ic.complex().dim() + 2;
        DoubleComplex dc(ic, cap);
        auto quotient_dims = mod2_cohomology_dims(quotient_complex(ic).complex);
        auto fixed_dims = mod2_cohomology_dims(fixed_subcomplex(ic).complex);
        SpectralPage e2 = spectral_pages(dc, SpectralKind::I, 2)[0];
        for (const auto& [key, dim] : e2.entry_dim) {
            auto [p, q] = key;
            std::size_t expect =
                q == 0 ? (p < static_cast<int>(quotient_dims.size()) ? quotient_dims[p]
                                                                     : 0)
                       : (p < static_cast<int>(fixed_dims.size()) ? fixed_dims[p] : 0);
            CHECK(dim == expect);
        }
    }
}

TEST_CASE("kind-II page two is group cohomology of H^q") {
    for (const char* name :
         {"octahedron_reflection", "hexagon_antipodal", "octahedron"}) {
        InvolutiveComplex ic = regularize(fixtures::by_name(name));
        const SimplicialComplex& k = ic.complex();
        int cap = k.dim() + 2;
        DoubleComplex dc(ic, cap);
        Mod2Cohomology hk(k);
        SpectralPage e2 = spectral_pages(dc, SpectralKind::II, 2)[0];
        for (const auto& [key, dim] : e2.entry_dim) {
            auto [p, q] = key;
            if (q > k.dim()) {
                CHECK(dim == 0);
                continue;
            }
            gf2::BitMatrix g = induced_map_mod2(k, hk, k, hk, ic.involution(), q);
            auto [h0, hp] = group_cohomology_dims(g);
            CHECK(dim == (p == 0 ? h0 : hp));
        }
    }
}

TEST_CASE("point, kind II: single row, no differentials") {
    DoubleComplex dc(fixtures::by_name("point"), 4);
    SpectralPage e2 = spectral_pages(dc, SpectralKind::II, 2)[0];
    for (const auto& [key, dim] : e2.entry_dim)
        CHECK(dim == (key.second == 0 ? 1u : 0u));
    CHECK(e2.all_differentials_zero());
}

TEST_CASE("trivial action: all I differentials vanish from page 2 on") {
    InvolutiveComplex ic = fixtures::octahedron_identity();
    DoubleComplex dc(ic, 4);
    for (const SpectralPage& page :
         spectral_pages(dc, SpectralKind::I, stable_page(dc)))
        CHECK(page.all_differentials_zero());
}

TEST_CASE("convergence: stable antidiagonals sum to the equivariant dims") {
    for (const char* name :
         {"octahedron_reflection", "hexagon_antipodal", "octahedron_antipodal",
          "interval_swap", "square", "point"}) {
        InvolutiveComplex ic = regularize(fixtures::by_name(name));
        int cap = ic.complex().dim() + 3;
        DoubleComplex dc(ic, cap);
        auto dims = total_equivariant_dims(dc, cap);
        for (SpectralKind kind : {SpectralKind::I, SpectralKind::II}) {
            SpectralPage inf = infinity_page(dc, kind);
            for (int n = 0; n <= cap; ++n)
                CHECK(infinity_antidiagonal(inf, n) == dims[n]);
        }
    }
}

TEST_CASE("page monotonicity") {
    InvolutiveComplex ic = regularize(fixtures::octahedron_antipodal());
    DoubleComplex dc(ic, 4);
    auto pages = spectral_pages(dc, SpectralKind::II, stable_page(dc));
    for (std::size_t i = 0; i + 1 < pages.size(); ++i)
        for (const auto& [key, dim] : pages[i + 1].entry_dim)
            CHECK(dim <= pages[i].dim(key.first, key.second));
}

TEST_CASE("differential ranks respect source and target dims") {
    for (const char* name : {"octahedron_antipodal", "octahedron_reflection"}) {
        InvolutiveComplex ic = regularize(fixtures::by_name(name));
        DoubleComplex dc(ic, 4);
        for (SpectralKind kind : {SpectralKind::I, SpectralKind::II})
            for (const auto& page : spectral_pages(dc, kind, stable_page(dc)))
                for (const auto& [key, rk] : page.diff_rank) {
                    auto [p, q] = key;
                    CHECK(rk <= page.dim(p, q));
                    if (p + page.r + (q - page.r + 1) <= dc.degree_cap())
                        CHECK(rk <= page.dim(p + page.r, q - page.r + 1));
                }
    }
}

TEST_CASE("kind-I differentials vanish off the q = r - 1 band") {
    for (const char* name : {"octahedron_reflection", "hexagon_antipodal"}) {
        InvolutiveComplex ic = regularize(fixtures::by_name(name));
        DoubleComplex dc(ic, ic.complex().dim() + 2);
        for (const SpectralPage& page :
             spectral_pages(dc, SpectralKind::I, stable_page(dc)))
            for (const auto& [key, rk] : page.diff_rank)
                if (key.second != page.r - 1) CHECK(rk == 0);
    }
}

TEST_CASE("free action: equivariant cohomology is the quotient's") {
    for (const char* name : {"hexagon_antipodal", "octahedron_antipodal"}) {
        InvolutiveComplex ic = regularize(fixtures::by_name(name));
        int cap = ic.complex().dim() + 3;
        DoubleComplex dc(ic, cap);
        auto dims = total_equivariant_dims(dc, cap);
        auto qdims = mod2_cohomology_dims(quotient_complex(ic).complex);
        for (int n = 0; n <= cap; ++n)
            CHECK(dims[n] ==
                  (n < static_cast<int>(qdims.size()) ? qdims[n] : 0));
    }
}

TEST_CASE("stabilization: high degrees carry the fixed part") {
    for (const char* name : {"octahedron_reflection", "hexagon_antipodal",
                             "interval_swap", "square", "octahedron"}) {
        InvolutiveComplex ic = regularize(fixtures::by_name(name));
        int dim = ic.complex().dim();
        DoubleComplex dc(ic, dim + 2);
        auto dims = total_equivariant_dims(dc, dim + 2);
        std::size_t fixed_total =
            Mod2Cohomology(fixed_subcomplex(ic).complex).total_dim();
        CHECK(dims[dim + 1] == fixed_total);
        CHECK(dims[dim + 2] == fixed_total);
    }
}

TEST_CASE("krasnov criterion") {
    KrasnovResult refl = krasnov_test(fixtures::octahedron_reflection());
    CHECK(refl.lhs == 2);
    CHECK(refl.rhs == 2);
    CHECK(refl.degenerate);

    KrasnovResult anti = krasnov_test(regularize(fixtures::octahedron_antipodal()));
    CHECK(anti.lhs == 0);
    CHECK(anti.rhs == 2);
    CHECK_FALSE(anti.degenerate);

    KrasnovResult id = krasnov_test(fixtures::octahedron_identity());
    CHECK(id.lhs == id.rhs);
    CHECK(id.degenerate);
    CHECK(id.lhs == 2);

    CHECK_THROWS_AS(krasnov_test(fixtures::octahedron_antipodal()), error);
}

TEST_CASE("krasnov degeneration matches vanishing II differentials") {
    for (const char* name : {"octahedron_reflection", "hexagon_antipodal",
                             "octahedron_antipodal", "square", "interval_swap"}) {
        InvolutiveComplex ic = regularize(fixtures::by_name(name));
        KrasnovResult kr = krasnov_test(ic);
        DoubleComplex dc(ic, ic.complex().dim() + 2);
        bool all_zero = true;
        for (const SpectralPage& page :
             spectral_pages(dc, SpectralKind::II, stable_page(dc)))
            all_zero = all_zero && page.all_differentials_zero();
        CHECK(kr.degenerate == all_zero);
    }
}

TEST_CASE("component map rank") {
    ComponentMapResult n1 = component_map_rank(fixtures::octahedron_reflection(), 1);
    CHECK(n1.image_dim == 1);
    CHECK(n1.s == 1);
    CHECK(n1.surjective);

    ComponentMapResult n2 = component_map_rank(fixtures::octahedron_reflection(), 2);
    CHECK(n2.image_dim == 1);
    CHECK(n2.s == 1);
    CHECK(n2.surjective);

    ComponentMapResult sq = component_map_rank(fixtures::square_identity(), 1);
    CHECK(sq.image_dim == 1);
    CHECK(sq.s == 1);
    CHECK(sq.surjective);

    CHECK_THROWS_AS(component_map_rank(fixtures::hexagon_antipodal(), 1), error);
}

TEST_CASE("obstruction report") {
    ObstructionReport refl = brauer_obstruction(fixtures::octahedron_reflection());
    CHECK(refl.s == 1);
    CHECK(refl.dim_ker_istar == 0);
    CHECK(refl.dim_im_d2_11 == 0);
    CHECK(refl.dim_ker_d3_02 == 1);
    CHECK(refl.surjective);
    CHECK(refl.dim_im_d2_11 <= refl.dim_ker_istar + refl.dim_im_d2_11);

    ObstructionReport id = brauer_obstruction(fixtures::octahedron_identity());
    CHECK(id.surjective);
    CHECK(id.dim_im_d2_11 == 0);

    CHECK_THROWS_AS(brauer_obstruction(regularize(fixtures::octahedron_antipodal())),
                    error);
}
