#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>
#include <vector>

#include "equivar/simplicial.hpp"

namespace equivar::exact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Sparse integer vector, entries sorted by index.
struct SparseVec {
    std::vector<std::pair<int, Int>> entries;

    bool zero() const { return entries.empty(); }
    int pivot() const { return entries.front().first; }
    const Int& pivot_value() const { return entries.front().second; }
};

SparseVec add_scaled(const SparseVec& a, const Int& ca, const SparseVec& b, const Int& cb);
void normalize_content(SparseVec& v);

/// Mutually reduced echelon basis (distinct pivots, each basis vector zero at
/// the others' pivots), built by integer-preserving elimination.
class IntEchelon {
public:
    /// Returns true when the vector was independent and joined the basis.
    bool insert(SparseVec v);
    std::size_t rank() const { return basis_.size(); }
    const std::vector<SparseVec>& basis() const { return basis_; }

    /// Rational coordinates in the echelon basis; nullopt when not in the span.
    std::optional<std::vector<Rat>> coordinates(const SparseVec& v) const;

private:
    std::vector<SparseVec> basis_;  // sorted by pivot index
};

/// Signed integer boundary matrix as columns over (q-1)-simplex indices.
std::vector<SparseVec> boundary_columns(const SimplicialComplex& k, int q);

/// Sign of the vertex permutation that sorts the image of a simplex; 0 when
/// the image is degenerate.
int map_sign(const Simplex& s, const std::vector<int>& vertex_map);

struct RationalHomology {
    std::vector<long long> betti;   // per degree
    std::vector<long long> trace;   // trace of the involution per degree
};

/// Rational Betti numbers and per-degree traces of the induced involution,
/// exact arithmetic throughout.
RationalHomology rational_homology_with_trace(const InvolutiveComplex& ic);

/// (betti_n, trace of g on H_n(K;Q))
std::pair<long long, long long> rational_homology_trace(const InvolutiveComplex& ic,
                                                        int degree);

}  // namespace equivar::exact
