#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equivar/cohomology.hpp"
#include "equivar/fixtures.hpp"
#include "equivar/rational.hpp"

using namespace equivar;
using exact::rational_homology_trace;
using exact::rational_homology_with_trace;

TEST_CASE("rational Betti numbers of the fixtures") {
    auto octa = rational_homology_with_trace(fixtures::octahedron_identity());
    CHECK(octa.betti == std::vector<long long>{1, 0, 1});

    auto hex = rational_homology_with_trace(fixtures::hexagon_identity());
    CHECK(hex.betti == std::vector<long long>{1, 1});

    auto quad = rational_homology_with_trace(fixtures::quadric_identity());
    CHECK(quad.betti == std::vector<long long>{1, 0, 2, 0, 1});
}

TEST_CASE("identity involution has trace equal to betti") {
    for (const char* name : {"octahedron", "hexagon", "square", "point"}) {
        auto h = rational_homology_with_trace(fixtures::by_name(name));
        CHECK(h.trace == h.betti);
    }
}

TEST_CASE("reflection reverses the orientation of the sphere") {
    auto [betti, trace] = rational_homology_trace(fixtures::octahedron_reflection(), 2);
    CHECK(betti == 1);
    CHECK(trace == -1);
}

TEST_CASE("antipodal map has degree -1 on the sphere") {
    auto [betti, trace] = rational_homology_trace(fixtures::octahedron_antipodal(), 2);
    CHECK(betti == 1);
    CHECK(trace == -1);
}

TEST_CASE("half turn of the circle preserves orientation") {
    auto [betti, trace] = rational_homology_trace(fixtures::hexagon_antipodal(), 1);
    CHECK(betti == 1);
    CHECK(trace == 1);
}

TEST_CASE("conjugation acts by -1 on both quadric H^2 generators") {
    auto h = rational_homology_with_trace(fixtures::quadric());
    CHECK(h.betti[2] == 2);
    CHECK(h.trace[2] == -2);
    CHECK(h.trace[0] == 1);
    CHECK(h.betti == std::vector<long long>{1, 0, 2, 0, 1});
}

TEST_CASE("Lefschetz number equals Euler characteristic of the fixed part") {
    for (const char* name :
         {"octahedron_reflection", "octahedron_antipodal", "hexagon_antipodal",
          "interval_swap", "octahedron", "quadric"}) {
        InvolutiveComplex ic = regularize(fixtures::by_name(name));
        auto h = rational_homology_with_trace(ic);
        long long lefschetz = 0;
        for (std::size_t q = 0; q < h.trace.size(); ++q)
            lefschetz += (q % 2 == 0 ? 1 : -1) * h.trace[q];
        CHECK(lefschetz == fixed_subcomplex(ic).complex.euler_characteristic());
    }
}

TEST_CASE("subdivision preserves rational homology and traces") {
    InvolutiveComplex anti = fixtures::octahedron_antipodal();
    auto before = rational_homology_with_trace(anti);
    auto after = rational_homology_with_trace(barycentric_subdivide(anti));
    CHECK(before.betti == after.betti);
    CHECK(before.trace == after.trace);
}

TEST_CASE("rational and mod-2 Betti numbers agree on torsion-free fixtures") {
    for (const char* name : {"octahedron", "hexagon", "quadric"}) {
        InvolutiveComplex ic = fixtures::by_name(name);
        auto rational = rational_homology_with_trace(ic).betti;
        auto mod2 = mod2_cohomology_dims(ic.complex());
        REQUIRE(rational.size() == mod2.size());
        for (std::size_t q = 0; q < mod2.size(); ++q)
            CHECK(rational[q] == static_cast<long long>(mod2[q]));
    }
}

TEST_CASE("RP2 has nontrivial torsion pairing mod 2 but trivial rational homology") {
    InvolutiveComplex anti = regularize(fixtures::octahedron_antipodal());
    QuotientComplex rp2 = quotient_complex(anti);
    auto h = rational_homology_with_trace(fixtures::with_identity(rp2.complex));
    CHECK(h.betti == std::vector<long long>{1, 0, 0});
}
