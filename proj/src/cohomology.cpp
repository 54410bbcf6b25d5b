#include "equivar/cohomology.hpp"

#include <algorithm>

namespace equivar {

namespace {

// facets of s, i.e. s with one vertex dropped
std::vector<Simplex> facets(const Simplex& s) {
    std::vector<Simplex> out;
    if (s.size() < 2) return out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f;
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i) f.push_back(s[j]);
        out.push_back(std::move(f));
    }
    return out;
}

Simplex map_vertices(const Simplex& s, const std::vector<int>& vertex_map) {
    Simplex out;
    out.reserve(s.size());
    for (int v : s) out.push_back(vertex_map.at(v));
    std::sort(out.begin(), out.end());
    return out;
}

bool degenerate(const Simplex& sorted) {
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

}  // namespace

gf2::BitMatrix coboundary_matrix(const SimplicialComplex& k, int q) {
    gf2::BitMatrix d(k.count(q + 1), k.count(q));
    const auto& high = k.simplices(q + 1);
    for (std::size_t i = 0; i < high.size(); ++i)
        for (const Simplex& f : facets(high[i]))
            d.set(i, k.index_of(f), true);
    return d;
}

gf2::BitMatrix boundary_matrix_mod2(const SimplicialComplex& k, int q) {
    gf2::BitMatrix b(k.count(q - 1), k.count(q));
    const auto& chains = k.simplices(q);
    for (std::size_t j = 0; j < chains.size(); ++j)
        for (const Simplex& f : facets(chains[j]))
            b.set(k.index_of(f), j, true);
    return b;
}

gf2::BitMatrix cochain_map(const SimplicialComplex& source,
                           const SimplicialComplex& target,
                           const std::vector<int>& vertex_map, int q) {
    gf2::BitMatrix m(source.count(q), target.count(q));
    const auto& simplices = source.simplices(q);
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        Simplex img = map_vertices(simplices[i], vertex_map);
        if (degenerate(img)) continue;
        int j = target.index_of(img);
        require(j >= 0, errc::non_simplicial_map, "vertex map is not simplicial");
        m.set(i, j, true);
    }
    return m;
}

gf2::BitMatrix chain_map_mod2(const SimplicialComplex& source,
                              const SimplicialComplex& target,
                              const std::vector<int>& vertex_map, int q) {
    gf2::BitMatrix m(target.count(q), source.count(q));
    const auto& simplices = source.simplices(q);
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        Simplex img = map_vertices(simplices[i], vertex_map);
        if (degenerate(img)) continue;
        int j = target.index_of(img);
        require(j >= 0, errc::non_simplicial_map, "vertex map is not simplicial");
        m.set(j, i, true);
    }
    return m;
}

void Mod2Cohomology::finish(const std::vector<gf2::BitMatrix>& d) {
    coboundaries_ = d;
    const int top = static_cast<int>(spaces_.size()) - 1;
    subquotients_.resize(spaces_.size());
    for (int q = 0; q <= top; ++q) {
        gf2::Subspace z = q < top ? gf2::kernel(d[q]) : gf2::Subspace::full(spaces_[q]);
        gf2::Subspace b = q > 0 ? gf2::image(d[q - 1]) : gf2::Subspace::zero(spaces_[q]);
        subquotients_[q] = gf2::Subquotient(z, b);
    }
}

Mod2Cohomology::Mod2Cohomology(const SimplicialComplex& k) {
    const int top = k.dim();
    if (top < 0) return;
    spaces_.resize(top + 1);
    std::vector<gf2::BitMatrix> d(top + 1);
    for (int q = 0; q <= top; ++q) {
        spaces_[q] = k.count(q);
        d[q] = coboundary_matrix(k, q);  // top degree maps into a 0-dim space
    }
    finish(d);
}

Mod2Cohomology::Mod2Cohomology(const ComplexPair& pair) {
    const SimplicialComplex& total = pair.total;
    const int top = total.dim();
    if (top < 0) return;

    // relative cochains: coordinates on total simplices outside the subcomplex
    std::vector<std::vector<int>> kept(top + 1), coord(top + 1);
    for (int q = 0; q <= top; ++q) coord[q].assign(total.count(q), -1);
    std::vector<std::vector<bool>> in_sub(top + 1);
    for (int q = 0; q <= top; ++q) in_sub[q].assign(total.count(q), false);
    for (int q = 0; q <= pair.sub.dim(); ++q)
        for (const Simplex& s : pair.sub.simplices(q)) {
            Simplex mapped;
            for (int v : s) mapped.push_back(pair.sub_vertex_in_total[v]);
            std::sort(mapped.begin(), mapped.end());
            in_sub[q][total.index_of(mapped)] = true;
        }
    for (int q = 0; q <= top; ++q)
        for (std::size_t i = 0; i < total.count(q); ++i)
            if (!in_sub[q][i]) {
                coord[q][i] = static_cast<int>(kept[q].size());
                kept[q].push_back(static_cast<int>(i));
            }

    spaces_.resize(top + 1);
    std::vector<gf2::BitMatrix> d(top + 1);
    for (int q = 0; q <= top; ++q) {
        spaces_[q] = kept[q].size();
        gf2::BitMatrix full = coboundary_matrix(total, q);
        std::size_t rows = q + 1 <= top ? kept[q + 1].size() : 0;
        gf2::BitMatrix rel(rows, kept[q].size());
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < kept[q].size(); ++c)
                if (full.get(kept[q + 1][r], kept[q][c])) rel.set(r, c, true);
        d[q] = std::move(rel);
    }
    finish(d);
}

std::vector<std::size_t> Mod2Cohomology::dims() const {
    std::vector<std::size_t> out(spaces_.size());
    for (std::size_t q = 0; q < out.size(); ++q) out[q] = subquotients_[q].dim();
    return out;
}

std::size_t Mod2Cohomology::total_dim() const {
    std::size_t t = 0;
    for (const auto& s : subquotients_) t += s.dim();
    return t;
}

void Mod2Homology::finish() {
    const int top = static_cast<int>(spaces_.size()) - 1;
    subquotients_.resize(spaces_.size());
    for (int q = 0; q <= top; ++q) {
        gf2::Subspace z =
            q > 0 ? gf2::kernel(boundaries_[q]) : gf2::Subspace::full(spaces_[0]);
        gf2::Subspace b = q < top ? gf2::image(boundaries_[q + 1])
                                  : gf2::Subspace::zero(spaces_[q]);
        subquotients_[q] = gf2::Subquotient(z, b);
    }
}

Mod2Homology::Mod2Homology(const SimplicialComplex& k) {
    const int top = k.dim();
    if (top < 0) return;
    spaces_.resize(top + 1);
    boundaries_.resize(top + 1);
    kept_.resize(top + 1);
    coord_of_.resize(top + 1);
    for (int q = 0; q <= top; ++q) {
        spaces_[q] = k.count(q);
        boundaries_[q] = boundary_matrix_mod2(k, q);
        coord_of_[q].resize(k.count(q));
        for (std::size_t i = 0; i < k.count(q); ++i) {
            kept_[q].push_back(static_cast<int>(i));
            coord_of_[q][i] = static_cast<int>(i);
        }
    }
    finish();
}

Mod2Homology::Mod2Homology(const ComplexPair& pair) {
    const SimplicialComplex& total = pair.total;
    const int top = total.dim();
    if (top < 0) return;

    std::vector<std::vector<bool>> in_sub(top + 1);
    for (int q = 0; q <= top; ++q) in_sub[q].assign(total.count(q), false);
    for (int q = 0; q <= pair.sub.dim(); ++q)
        for (const Simplex& s : pair.sub.simplices(q)) {
            Simplex mapped;
            for (int v : s) mapped.push_back(pair.sub_vertex_in_total[v]);
            std::sort(mapped.begin(), mapped.end());
            in_sub[q][total.index_of(mapped)] = true;
        }

    spaces_.resize(top + 1);
    boundaries_.resize(top + 1);
    kept_.resize(top + 1);
    coord_of_.resize(top + 1);
    for (int q = 0; q <= top; ++q) {
        coord_of_[q].assign(total.count(q), -1);
        for (std::size_t i = 0; i < total.count(q); ++i)
            if (!in_sub[q][i]) {
                coord_of_[q][i] = static_cast<int>(kept_[q].size());
                kept_[q].push_back(static_cast<int>(i));
            }
        spaces_[q] = kept_[q].size();
    }
    for (int q = 0; q <= top; ++q) {
        gf2::BitMatrix full = boundary_matrix_mod2(total, q);
        std::size_t rows = q > 0 ? kept_[q - 1].size() : 0;
        gf2::BitMatrix rel(rows, kept_[q].size());
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < kept_[q].size(); ++c)
                if (full.get(kept_[q - 1][r], kept_[q][c])) rel.set(r, c, true);
        boundaries_[q] = std::move(rel);
    }
    finish();
}

std::vector<std::size_t> Mod2Homology::dims() const {
    std::vector<std::size_t> out(spaces_.size());
    for (std::size_t q = 0; q < out.size(); ++q) out[q] = subquotients_[q].dim();
    return out;
}

std::size_t Mod2Homology::total_dim() const {
    std::size_t t = 0;
    for (const auto& s : subquotients_) t += s.dim();
    return t;
}

std::vector<std::size_t> mod2_cohomology_dims(const SimplicialComplex& k) {
    return Mod2Cohomology(k).dims();
}

std::vector<std::size_t> mod2_cohomology_dims(const ComplexPair& pair) {
    return Mod2Cohomology(pair).dims();
}

gf2::BitMatrix induced_map_mod2(const SimplicialComplex& source,
                                const SimplicialComplex& target,
                                const std::vector<int>& vertex_map, int degree) {
    Mod2Cohomology hs(source), ht(target);
    return induced_map_mod2(source, hs, target, ht, vertex_map, degree);
}

gf2::BitMatrix induced_map_mod2(const SimplicialComplex& source,
                                const Mod2Cohomology& source_cohomology,
                                const SimplicialComplex& target,
                                const Mod2Cohomology& target_cohomology,
                                const std::vector<int>& vertex_map, int degree) {
    if (degree < 0 || degree > source.dim() || degree > target.dim())
        return gf2::BitMatrix(source_cohomology.dim(degree),
                              target_cohomology.dim(degree));
    gf2::BitMatrix pullback = cochain_map(source, target, vertex_map, degree);
    return gf2::induced_matrix(pullback, target_cohomology.at(degree),
                               source_cohomology.at(degree));
}

gf2::BitMatrix induced_homology_map_mod2(const SimplicialComplex& source,
                                         const Mod2Homology& source_homology,
                                         const SimplicialComplex& target,
                                         const Mod2Homology& target_homology,
                                         const std::vector<int>& vertex_map,
                                         int degree) {
    if (degree < 0 || degree > source.dim() || degree > target.dim())
        return gf2::BitMatrix(target_homology.dim(degree),
                              source_homology.dim(degree));
    gf2::BitMatrix push = chain_map_mod2(source, target, vertex_map, degree);
    return gf2::induced_matrix(push, source_homology.at(degree),
                               target_homology.at(degree));
}

}  // namespace equivar
