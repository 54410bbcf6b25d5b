#pragma once

#include <vector>

#include "equivar/gf2.hpp"
#include "equivar/simplicial.hpp"

namespace equivar {

/// Coboundary d^q : C^q -> C^{q+1}; rows are (q+1)-simplices.
gf2::BitMatrix coboundary_matrix(const SimplicialComplex& k, int q);
/// Mod-2 boundary of chains, C_q -> C_{q-1}; rows are (q-1)-simplices.
gf2::BitMatrix boundary_matrix_mod2(const SimplicialComplex& k, int q);

/// Pullback f# : C^q(target) -> C^q(source) of a simplicial vertex map
/// f : source -> target; degenerate simplices pull back to zero.
gf2::BitMatrix cochain_map(const SimplicialComplex& source,
                           const SimplicialComplex& target,
                           const std::vector<int>& vertex_map, int q);
/// Pushforward f# : C_q(source) -> C_q(target).
gf2::BitMatrix chain_map_mod2(const SimplicialComplex& source,
                              const SimplicialComplex& target,
                              const std::vector<int>& vertex_map, int q);

/// Simplicial cohomology over F2 with canonical cocycle representatives,
/// absolute or relative (cochains vanishing on the subcomplex).
class Mod2Cohomology {
public:
    explicit Mod2Cohomology(const SimplicialComplex& k);
    explicit Mod2Cohomology(const ComplexPair& pair);

    int max_degree() const { return static_cast<int>(spaces_.size()) - 1; }
    std::size_t cochain_dim(int q) const {
        return q >= 0 && q <= max_degree() ? spaces_[q] : 0;
    }
    std::size_t dim(int q) const {
        return q >= 0 && q <= max_degree() ? subquotients_[q].dim() : 0;
    }
    std::vector<std::size_t> dims() const;
    std::size_t total_dim() const;
    const gf2::Subquotient& at(int q) const { return subquotients_[q]; }
    const gf2::BitMatrix& coboundary(int q) const { return coboundaries_[q]; }

private:
    void finish(const std::vector<gf2::BitMatrix>& d);

    std::vector<std::size_t> spaces_;
    std::vector<gf2::BitMatrix> coboundaries_;
    std::vector<gf2::Subquotient> subquotients_;
};

/// Simplicial homology over F2, absolute or relative.
class Mod2Homology {
public:
    explicit Mod2Homology(const SimplicialComplex& k);
    explicit Mod2Homology(const ComplexPair& pair);

    int max_degree() const { return static_cast<int>(spaces_.size()) - 1; }
    std::size_t chain_dim(int q) const {
        return q >= 0 && q <= max_degree() ? spaces_[q] : 0;
    }
    std::size_t dim(int q) const {
        return q >= 0 && q <= max_degree() ? subquotients_[q].dim() : 0;
    }
    std::vector<std::size_t> dims() const;
    std::size_t total_dim() const;
    const gf2::Subquotient& at(int q) const { return subquotients_[q]; }
    /// Boundary C_q -> C_{q-1} in this complex's own coordinates.
    const gf2::BitMatrix& boundary(int q) const { return boundaries_[q]; }
    /// For relative homology: indices of total simplices kept in degree q.
    const std::vector<int>& kept(int q) const { return kept_[q]; }
    /// For relative homology: total-simplex index -> relative coordinate or -1.
    const std::vector<int>& coord_of(int q) const { return coord_of_[q]; }

private:
    void finish();

    std::vector<std::size_t> spaces_;
    std::vector<gf2::BitMatrix> boundaries_;
    std::vector<gf2::Subquotient> subquotients_;
    std::vector<std::vector<int>> kept_;
    std::vector<std::vector<int>> coord_of_;
};

std::vector<std::size_t> mod2_cohomology_dims(const SimplicialComplex& k);
std::vector<std::size_t> mod2_cohomology_dims(const ComplexPair& pair);

/// Matrix of f* : H^degree(target) -> H^degree(source) in canonical bases.
gf2::BitMatrix induced_map_mod2(const SimplicialComplex& source,
                                const SimplicialComplex& target,
                                const std::vector<int>& vertex_map, int degree);
gf2::BitMatrix induced_map_mod2(const SimplicialComplex& source,
                                const Mod2Cohomology& source_cohomology,
                                const SimplicialComplex& target,
                                const Mod2Cohomology& target_cohomology,
                                const std::vector<int>& vertex_map, int degree);

/// Matrix of f_* : H_degree(source) -> H_degree(target) in canonical bases.
gf2::BitMatrix induced_homology_map_mod2(const SimplicialComplex& source,
                                         const Mod2Homology& source_homology,
                                         const SimplicialComplex& target,
                                         const Mod2Homology& target_homology,
                                         const std::vector<int>& vertex_map,
                                         int degree);

}  // namespace equivar
