#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "equivar/errors.hpp"

namespace equivar {

/// Strictly increasing vertex indices.
using Simplex = std::vector<int>;

inline constexpr std::size_t default_simplex_cap = 2'000'000;

/// Finite abstract simplicial complex, closed under faces. Simplices are
/// bucketed by dimension and kept in lexicographic order, fixed at
/// construction; every matrix downstream references this ordering.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_maximal(int vertex_count,
                                          const std::vector<Simplex>& maximal,
                                          std::size_t cap = default_simplex_cap);

    int vertex_count() const { return vertex_count_; }
    /// Dimension of the complex; -1 when there are no simplices at all.
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t count(int q) const {
        return q >= 0 && q <= dim() ? by_dim_[q].size() : 0;
    }
    const std::vector<Simplex>& simplices(int q) const;
    /// Index of the simplex in its dimension bucket, or -1 when absent.
    int index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s) >= 0; }

    std::size_t total_simplices() const;
    long long euler_characteristic() const;
    /// Connected components of the 1-skeleton (counts isolated 0-simplices).
    std::size_t component_count() const;

private:
    int vertex_count_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, int>> index_;
};

/// A complex together with a simplicial involution of its vertices.
class InvolutiveComplex {
public:
    InvolutiveComplex(SimplicialComplex complex, std::vector<int> involution);

    const SimplicialComplex& complex() const { return complex_; }
    const std::vector<int>& involution() const { return involution_; }
    int g(int v) const { return involution_[v]; }
    bool trivial() const { return trivial_; }

    Simplex map_simplex(const Simplex& s) const;
    bool simplex_fixed(const Simplex& s) const;

    /// Regularity in the sense required for |K/G| = |K|/G: whenever a
    /// sign-pattern image of a simplex spans a simplex, a single group
    /// element realizes the pattern.
    bool is_regular() const;
    void require_regular(const char* op) const;

private:
    SimplicialComplex complex_;
    std::vector<int> involution_;
    bool trivial_ = false;
};

/// Subcomplex embedded in a larger complex via a vertex injection.
struct ComplexPair {
    SimplicialComplex total;
    SimplicialComplex sub;
    std::vector<int> sub_vertex_in_total;  // sub vertex -> total vertex

    ComplexPair(SimplicialComplex total_, SimplicialComplex sub_,
                std::vector<int> sub_vertex_in_total_);
};

struct FixedSubcomplex {
    SimplicialComplex complex;
    std::vector<int> vertex_in_parent;  // fixed-subcomplex vertex -> parent vertex
};

struct QuotientComplex {
    SimplicialComplex complex;
    std::vector<int> vertex_orbit;  // parent vertex -> quotient vertex
};

struct SubdividedComplex {
    SimplicialComplex complex;
    std::vector<Simplex> vertex_simplex;  // subdivision vertex -> parent simplex
};

/// Simplices fixed pointwise by the involution. Requires a regular action.
FixedSubcomplex fixed_subcomplex(const InvolutiveComplex& ic);

/// Vertex orbits and simplex images. Requires a regular action.
QuotientComplex quotient_complex(const InvolutiveComplex& ic);

SubdividedComplex barycentric_subdivide(const SimplicialComplex& k,
                                        std::size_t cap = default_simplex_cap);
InvolutiveComplex barycentric_subdivide(const InvolutiveComplex& ic,
                                        std::size_t cap = default_simplex_cap);

/// Same realization and action, regular; 0, 1 or 2 barycentric subdivisions.
InvolutiveComplex regularize(const InvolutiveComplex& ic,
                             std::size_t cap = default_simplex_cap);

/// Simplices that are not a face of any larger simplex.
std::vector<Simplex> maximal_simplices(const SimplicialComplex& k);

/// Staircase triangulation of |a| x |b| in the product vertex order
/// (vertex (u, v) gets index u * b.vertex_count() + v).
SimplicialComplex product_complex(const SimplicialComplex& a,
                                  const SimplicialComplex& b,
                                  std::size_t cap = default_simplex_cap);

/// The pair (K/G, K^G) with the fixed part embedded through the quotient.
ComplexPair quotient_pair(const InvolutiveComplex& ic);

}  // namespace equivar
