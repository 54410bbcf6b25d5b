#pragma once

#include <string>
#include <vector>

#include "equivar/simplicial.hpp"

namespace equivar::fixtures {

// Desk-scale models. The octahedron is labelled equator first (0..3, the
// 4-cycle 0-1-2-3) and poles last (4, 5) so that the equatorial reflection
// is monotone on every triangle; the staircase product then carries
// reflection x reflection simplicially.

SimplicialComplex point();
SimplicialComplex interval();
SimplicialComplex square_circle();
SimplicialComplex hexagon();
SimplicialComplex octahedron();
SimplicialComplex octahedron_product();

InvolutiveComplex with_identity(const SimplicialComplex& k);

InvolutiveComplex interval_swap();           // midpoint appears after regularize
InvolutiveComplex square_identity();
InvolutiveComplex hexagon_identity();
InvolutiveComplex hexagon_antipodal();       // free rotation i -> i+3
InvolutiveComplex octahedron_identity();
InvolutiveComplex octahedron_reflection();   // swaps the poles, fixes the equator
InvolutiveComplex octahedron_antipodal();    // free
InvolutiveComplex quadric();                 // octahedron^2, reflection^2
InvolutiveComplex quadric_identity();

std::vector<std::string> names();
/// Fixture by name; throws parse_error for unknown names.
InvolutiveComplex by_name(const std::string& name);

}  // namespace equivar::fixtures
