#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equivar/engine.hpp"
#include "equivar/fixtures.hpp"
#include "equivar/smith.hpp"
#include "involutive_gen.hpp"

using namespace equivar;

TEST_CASE("transfer sequence of the free antipodal sphere") {
    InvolutiveComplex anti = regularize(fixtures::octahedron_antipodal());
    SmithSequence sm = build_smith_sequence(anti);
    CHECK(sm.dim_k == std::vector<std::size_t>{1, 0, 1});
    CHECK(sm.dim_rel == std::vector<std::size_t>{1, 1, 1});  // RP^2
    CHECK(sm.dim_fixed == std::vector<std::size_t>{0, 0, 0});
    CHECK(smith_exact(sm));
    CHECK(smith_transfer_identity(sm));
    CHECK(smith_boundary_identity(sm));
}

TEST_CASE("identity involution collapses the relative part") {
    SmithSequence sm = build_smith_sequence(fixtures::octahedron_identity());
    CHECK(sm.dim_rel == std::vector<std::size_t>{0, 0, 0});
    for (int n = 0; n <= sm.top; ++n) {
        CHECK(sm.dim_fixed[n] == sm.dim_k[n]);
        CHECK(sm.i_fixed[n] == gf2::BitMatrix::identity(sm.dim_k[n]));
    }
    CHECK(smith_exact(sm));
    CHECK(smith_transfer_identity(sm));
}

TEST_CASE("reflection sphere sequence is exact with the fixed circle") {
    SmithSequence sm = build_smith_sequence(fixtures::octahedron_reflection());
    CHECK(sm.dim_fixed == std::vector<std::size_t>{1, 1, 0});
    CHECK(smith_exact(sm));
    CHECK(smith_transfer_identity(sm));
    CHECK(smith_boundary_identity(sm));
}

TEST_CASE("smith sequence needs a regular action") {
    CHECK_THROWS_AS(build_smith_sequence(fixtures::octahedron_antipodal()), error);
}

TEST_CASE("saturation report") {
    SmithReport refl = image_criterion(build_smith_sequence(fixtures::octahedron_reflection()));
    CHECK(refl.all_saturated);
    CHECK(refl.image_inside_invariants);

    SmithReport id = image_criterion(build_smith_sequence(fixtures::octahedron_identity()));
    CHECK(id.all_saturated);

    SmithReport anti = image_criterion(
        build_smith_sequence(regularize(fixtures::octahedron_antipodal())));
    CHECK_FALSE(anti.all_saturated);
    CHECK(anti.image_inside_invariants);
}

TEST_CASE("saturation in a degree matches the invariant count") {
    for (const char* name : {"octahedron_reflection", "octahedron_antipodal",
                             "hexagon_antipodal", "square", "interval_swap"}) {
        SmithSequence sm =
            build_smith_sequence(regularize(fixtures::by_name(name)));
        SmithReport report = image_criterion(sm);
        for (int n = 0; n <= sm.top; ++n)
            CHECK(report.saturated[n] ==
                  (report.dim_im_i[n] == report.dim_invariant[n]));
    }
}

TEST_CASE("total Betti bookkeeping across the sequence") {
    for (const char* name : {"octahedron_reflection", "octahedron_antipodal",
                             "hexagon_antipodal", "interval_swap"}) {
        InvolutiveComplex ic = regularize(fixtures::by_name(name));
        SmithSequence sm = build_smith_sequence(ic);
        SmithReport report = image_criterion(sm);
        std::size_t fixed_total = 0, k_total = 0, im_total = 0;
        for (int n = 0; n <= sm.top; ++n) {
            fixed_total += sm.dim_fixed[n];
            k_total += sm.dim_k[n];
            im_total += report.dim_im_i[n];
        }
        CHECK(fixed_total == 2 * im_total - k_total);
    }
}

TEST_CASE("harnack inequality and slack") {
    HarnackResult refl = harnack_thom(fixtures::octahedron_reflection());
    CHECK(refl.lhs == 2);
    CHECK(refl.rhs == 2);
    CHECK(refl.slack == 0);

    HarnackResult anti = harnack_thom(regularize(fixtures::octahedron_antipodal()));
    CHECK(anti.lhs == 0);
    CHECK(anti.rhs == 2);
    CHECK(anti.slack == 2);

    HarnackResult id = harnack_thom(fixtures::octahedron_identity());
    CHECK(id.lhs == 2);
    CHECK(id.rhs == 2);
    CHECK(id.slack == 0);
}

TEST_CASE("degeneration, slack and saturation agree") {
    for (const char* name : {"octahedron_reflection", "octahedron_antipodal",
                             "hexagon_antipodal", "square", "interval_swap"}) {
        InvolutiveComplex ic = regularize(fixtures::by_name(name));
        bool degenerate = krasnov_test(ic).degenerate;
        bool slack_zero = harnack_thom(ic).slack == 0;
        bool saturated = image_criterion(build_smith_sequence(ic)).all_saturated;
        CHECK(degenerate == slack_zero);
        CHECK(slack_zero == saturated);
    }
}

TEST_CASE("lefschetz check on the fixtures") {
    LefschetzResult refl = lefschetz_check(fixtures::octahedron_reflection());
    CHECK(refl.lefschetz_number == 0);
    CHECK(refl.chi_fixed == 0);
    CHECK(refl.consistent);

    LefschetzResult anti = lefschetz_check(fixtures::octahedron_antipodal());
    CHECK(anti.lefschetz_number == 0);
    CHECK(anti.chi_fixed == 0);
    CHECK(anti.consistent);

    LefschetzResult id = lefschetz_check(fixtures::octahedron_identity());
    CHECK(id.lefschetz_number == 2);
    CHECK(id.chi_fixed == 2);
    CHECK(id.consistent);

    // swap interval: L = 1 = chi(midpoint)
    LefschetzResult seg = lefschetz_check(fixtures::interval_swap());
    CHECK(seg.lefschetz_number == 1);
    CHECK(seg.chi_fixed == 1);
    CHECK(seg.consistent);
}

TEST_CASE("saturation follows from the quadric hypothesis chain") {
    // nonempty fixed part plus vanishing H^1 and H^3 of the quotient force
    // saturation in every degree on a 4-dimensional model
    InvolutiveComplex q = fixtures::quadric();
    auto quot = quotient_complex(q);
    auto qdims = mod2_cohomology_dims(quot.complex);
    REQUIRE(fixed_subcomplex(q).complex.total_simplices() > 0);
    REQUIRE(qdims[1] == 0);
    REQUIRE(qdims[3] == 0);
    CHECK(image_criterion(build_smith_sequence(q)).all_saturated);
}

TEST_CASE("randomized smith exactness and identities") {
    auto pool = testgen::regular_pool(1234, 6, 400);
    for (const InvolutiveComplex& ic : pool) {
        SmithSequence sm = build_smith_sequence(ic);
        CHECK(smith_exact(sm));
        CHECK(smith_transfer_identity(sm));
        CHECK(smith_boundary_identity(sm));
        CHECK(image_criterion(sm).image_inside_invariants);
    }
}
