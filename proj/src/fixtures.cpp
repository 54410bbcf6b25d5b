#include "equivar/fixtures.hpp"

#include <algorithm>

namespace equivar::fixtures {

SimplicialComplex point() { return SimplicialComplex::from_maximal(1, {{0}}); }

SimplicialComplex interval() { return SimplicialComplex::from_maximal(2, {{0, 1}}); }

SimplicialComplex square_circle() {
    return SimplicialComplex::from_maximal(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

SimplicialComplex hexagon() {
    std::vector<Simplex> edges;
    for (int i = 0; i < 6; ++i) edges.push_back({std::min(i, (i + 1) % 6),
                                                 std::max(i, (i + 1) % 6)});
    return SimplicialComplex::from_maximal(6, edges);
}

SimplicialComplex octahedron() {
    std::vector<Simplex> faces;
    for (int pole : {4, 5})
        for (int i = 0; i < 4; ++i) {
            Simplex f{std::min(i, (i + 1) % 4), std::max(i, (i + 1) % 4), pole};
            faces.push_back(f);
        }
    return SimplicialComplex::from_maximal(6, faces);
}

SimplicialComplex octahedron_product() {
    SimplicialComplex o = octahedron();
    return product_complex(o, o);
}

InvolutiveComplex with_identity(const SimplicialComplex& k) {
    std::vector<int> id(k.vertex_count());
    for (int v = 0; v < k.vertex_count(); ++v) id[v] = v;
    return InvolutiveComplex(k, id);
}

InvolutiveComplex interval_swap() {
    return InvolutiveComplex(interval(), {1, 0});
}

InvolutiveComplex square_identity() { return with_identity(square_circle()); }
InvolutiveComplex hexagon_identity() { return with_identity(hexagon()); }

InvolutiveComplex hexagon_antipodal() {
    std::vector<int> g(6);
    for (int i = 0; i < 6; ++i) g[i] = (i + 3) % 6;
    return InvolutiveComplex(hexagon(), g);
}

InvolutiveComplex octahedron_identity() { return with_identity(octahedron()); }

InvolutiveComplex octahedron_reflection() {
    return InvolutiveComplex(octahedron(), {0, 1, 2, 3, 5, 4});
}

InvolutiveComplex octahedron_antipodal() {
    // (x,y,z) -> (-x,-y,-z): opposite equatorial vertices and opposite poles
    return InvolutiveComplex(octahedron(), {2, 3, 0, 1, 5, 4});
}

namespace {

InvolutiveComplex octahedron_square(const std::vector<int>& factor_g) {
    SimplicialComplex prod = octahedron_product();
    std::vector<int> g(36);
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v) g[u * 6 + v] = factor_g[u] * 6 + factor_g[v];
    return InvolutiveComplex(std::move(prod), std::move(g));
}

}  // namespace

InvolutiveComplex quadric() { return octahedron_square({0, 1, 2, 3, 5, 4}); }

InvolutiveComplex quadric_identity() {
    return octahedron_square({0, 1, 2, 3, 4, 5});
}

std::vector<std::string> names() {
    return {"point",        "interval",      "interval_swap",
            "square",       "hexagon",       "hexagon_antipodal",
            "octahedron",   "octahedron_reflection",
            "octahedron_antipodal",          "quadric",
            "quadric_identity"};
}

InvolutiveComplex by_name(const std::string& name) {
    if (name == "point") return with_identity(point());
    if (name == "interval") return with_identity(interval());
    if (name == "interval_swap") return interval_swap();
    if (name == "square") return square_identity();
    if (name == "hexagon") return hexagon_identity();
    if (name == "hexagon_antipodal") return hexagon_antipodal();
    if (name == "octahedron") return octahedron_identity();
    if (name == "octahedron_reflection") return octahedron_reflection();
    if (name == "octahedron_antipodal") return octahedron_antipodal();
    if (name == "quadric") return quadric();
    if (name == "quadric_identity") return quadric_identity();
    fail(errc::parse_error, "unknown fixture: " + name);
}

}  // namespace equivar::fixtures
