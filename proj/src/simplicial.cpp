#include "equivar/simplicial.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace equivar {

namespace {

void check_simplex(const Simplex& s, int vertex_count) {
    require(!s.empty(), errc::parse_error, "empty simplex");
    for (std::size_t i = 0; i < s.size(); ++i) {
        require(s[i] >= 0 && s[i] < vertex_count, errc::parse_error,
                "vertex index out of range: " + std::to_string(s[i]));
        require(i == 0 || s[i - 1] < s[i], errc::parse_error,
                "simplex vertices must be strictly increasing");
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(int vertex_count,
                                                  const std::vector<Simplex>& maximal,
                                                  std::size_t cap) {
    require(vertex_count >= 0, errc::parse_error, "negative vertex count");
    std::set<Simplex> closure;
    for (Simplex s : maximal) {
        std::sort(s.begin(), s.end());
        check_simplex(s, vertex_count);
        const std::size_t n = s.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i)) face.push_back(s[i]);
            closure.insert(std::move(face));
            require(closure.size() <= cap, errc::simplex_cap_exceeded,
                    "face closure exceeds simplex cap of " + std::to_string(cap));
        }
    }

    SimplicialComplex k;
    k.vertex_count_ = vertex_count;
    for (const Simplex& s : closure) {
        int q = static_cast<int>(s.size()) - 1;
        if (q >= static_cast<int>(k.by_dim_.size())) k.by_dim_.resize(q + 1);
        k.by_dim_[q].push_back(s);
    }
    k.index_.resize(k.by_dim_.size());
    for (std::size_t q = 0; q < k.by_dim_.size(); ++q)
        for (std::size_t i = 0; i < k.by_dim_[q].size(); ++i)
            k.index_[q][k.by_dim_[q][i]] = static_cast<int>(i);
    return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
    static const std::vector<Simplex> empty;
    return q >= 0 && q <= dim() ? by_dim_[q] : empty;
}

int SimplicialComplex::index_of(const Simplex& s) const {
    int q = static_cast<int>(s.size()) - 1;
    if (q < 0 || q > dim()) return -1;
    auto it = index_[q].find(s);
    return it == index_[q].end() ? -1 : it->second;
}

std::size_t SimplicialComplex::total_simplices() const {
    std::size_t n = 0;
    for (const auto& bucket : by_dim_) n += bucket.size();
    return n;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int q = 0; q <= dim(); ++q)
        chi += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(count(q));
    return chi;
}

std::size_t SimplicialComplex::component_count() const {
    if (dim() < 0) return 0;
    const auto& verts = simplices(0);
    std::map<int, std::size_t> slot;
    for (std::size_t i = 0; i < verts.size(); ++i) slot[verts[i][0]] = i;
    std::vector<std::size_t> parent(verts.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Simplex& e : simplices(1)) {
        std::size_t a = find(slot.at(e[0])), b = find(slot.at(e[1]));
        if (a != b) parent[a] = b;
    }
    std::size_t components = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (find(i) == i) ++components;
    return components;
}

InvolutiveComplex::InvolutiveComplex(SimplicialComplex complex, std::vector<int> involution)
    : complex_(std::move(complex)), involution_(std::move(involution)) {
    const int n = complex_.vertex_count();
    require(static_cast<int>(involution_.size()) == n, errc::invalid_permutation,
            "involution length must equal the vertex count");
    std::vector<bool> seen(n, false);
    for (int v = 0; v < n; ++v) {
        int w = involution_[v];
        require(w >= 0 && w < n, errc::invalid_permutation,
                "involution image out of range");
        require(!seen[w], errc::invalid_permutation, "involution is not a bijection");
        seen[w] = true;
    }
    for (int v = 0; v < n; ++v)
        require(involution_[involution_[v]] == v, errc::invalid_permutation,
                "permutation does not have order <= 2");
    trivial_ = true;
    for (int v = 0; v < n; ++v)
        if (involution_[v] != v) {
            trivial_ = false;
            break;
        }
    if (!trivial_) {
        for (int q = 0; q <= complex_.dim(); ++q)
            for (const Simplex& s : complex_.simplices(q))
                require(complex_.contains(map_simplex(s)), errc::non_simplicial_map,
                        "involution does not map simplices to simplices");
    }
}

Simplex InvolutiveComplex::map_simplex(const Simplex& s) const {
    Simplex out;
    out.reserve(s.size());
    for (int v : s) out.push_back(involution_[v]);
    std::sort(out.begin(), out.end());
    return out;
}

bool InvolutiveComplex::simplex_fixed(const Simplex& s) const {
    for (int v : s)
        if (involution_[v] != v) return false;
    return true;
}

bool InvolutiveComplex::is_regular() const {
    if (trivial_) return true;
    for (int q = 0; q <= complex_.dim(); ++q) {
        for (const Simplex& s : complex_.simplices(q)) {
            std::vector<std::size_t> moved;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (involution_[s[i]] != s[i]) moved.push_back(i);
            if (moved.empty()) continue;
            // Flip every subset of the moved vertices; if the (possibly
            // degenerate) image spans a simplex, one of id/g must realize it.
            for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << moved.size());
                 ++mask) {
                Simplex image(s);
                for (std::size_t i = 0; i < moved.size(); ++i)
                    if (mask & (std::size_t(1) << i))
                        image[moved[i]] = involution_[s[moved[i]]];
                Simplex sorted(image);
                std::sort(sorted.begin(), sorted.end());
                sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                if (!complex_.contains(sorted)) continue;
                // id fails (some moved vertex flipped); g needs all moved flipped,
                // which the mask bound excludes. A partial flip spanning a
                // simplex is exactly the obstruction.
                return false;
            }
        }
    }
    return true;
}

void InvolutiveComplex::require_regular(const char* op) const {
    require(is_regular(), errc::non_regular_action,
            std::string(op) + " requires a regular action (run regularize first)");
}

ComplexPair::ComplexPair(SimplicialComplex total_, SimplicialComplex sub_,
                         std::vector<int> sub_vertex_in_total_)
    : total(std::move(total_)), sub(std::move(sub_)),
      sub_vertex_in_total(std::move(sub_vertex_in_total_)) {
    require(static_cast<int>(sub_vertex_in_total.size()) == sub.vertex_count(),
            errc::dimension_mismatch, "pair: vertex map length mismatch");
    for (int q = 0; q <= sub.dim(); ++q)
        for (const Simplex& s : sub.simplices(q)) {
            Simplex mapped;
            for (int v : s) mapped.push_back(sub_vertex_in_total.at(v));
            std::sort(mapped.begin(), mapped.end());
            require(std::adjacent_find(mapped.begin(), mapped.end()) == mapped.end() &&
                        total.contains(mapped),
                    errc::non_simplicial_map, "pair: sub simplex not in total");
        }
}

FixedSubcomplex fixed_subcomplex(const InvolutiveComplex& ic) {
    ic.require_regular("fixed_subcomplex");
    const SimplicialComplex& k = ic.complex();
    std::vector<int> fixed_vertices;
    std::vector<int> new_index(k.vertex_count(), -1);
    for (int v = 0; v < k.vertex_count(); ++v)
        if (ic.g(v) == v) {
            new_index[v] = static_cast<int>(fixed_vertices.size());
            fixed_vertices.push_back(v);
        }
    std::vector<Simplex> fixed;
    for (int q = 0; q <= k.dim(); ++q)
        for (const Simplex& s : k.simplices(q))
            if (ic.simplex_fixed(s)) {
                Simplex remapped;
                for (int v : s) remapped.push_back(new_index[v]);
                fixed.push_back(std::move(remapped));
            }
    FixedSubcomplex out;
    out.complex = SimplicialComplex::from_maximal(
        static_cast<int>(fixed_vertices.size()), fixed);
    out.vertex_in_parent = std::move(fixed_vertices);
    return out;
}

QuotientComplex quotient_complex(const InvolutiveComplex& ic) {
    ic.require_regular("quotient_complex");
    const SimplicialComplex& k = ic.complex();
    std::vector<int> orbit(k.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < k.vertex_count(); ++v) {
        if (orbit[v] >= 0) continue;
        orbit[v] = next;
        orbit[ic.g(v)] = next;
        ++next;
    }
    std::vector<Simplex> images;
    for (int q = 0; q <= k.dim(); ++q)
        for (const Simplex& s : k.simplices(q)) {
            Simplex img;
            for (int v : s) img.push_back(orbit[v]);
            std::sort(img.begin(), img.end());
            require(std::adjacent_find(img.begin(), img.end()) == img.end(),
                    errc::internal, "quotient collapsed a simplex despite regularity");
            images.push_back(std::move(img));
        }
    QuotientComplex out;
    out.complex = SimplicialComplex::from_maximal(next, images);
    out.vertex_orbit = std::move(orbit);
    return out;
}

SubdividedComplex barycentric_subdivide(const SimplicialComplex& k, std::size_t cap) {
    SubdividedComplex out;
    std::map<Simplex, int> vertex_of;
    for (int q = 0; q <= k.dim(); ++q)
        for (const Simplex& s : k.simplices(q)) {
            vertex_of[s] = static_cast<int>(out.vertex_simplex.size());
            out.vertex_simplex.push_back(s);
        }

    // maximal simplices of k: not a facet of anything one dimension up
    std::vector<Simplex> chains;
    for (int q = 0; q <= k.dim(); ++q) {
        for (const Simplex& s : k.simplices(q)) {
            bool maximal = true;
            if (q + 1 <= k.dim()) {
                for (const Simplex& t : k.simplices(q + 1)) {
                    if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                        maximal = false;
                        break;
                    }
                }
            }
            if (!maximal) continue;
            // one maximal chain per ordering of the vertices
            Simplex order(s);
            std::sort(order.begin(), order.end());
            do {
                Simplex chain;
                Simplex prefix;
                for (int v : order) {
                    prefix.push_back(v);
                    Simplex sorted(prefix);
                    std::sort(sorted.begin(), sorted.end());
                    chain.push_back(vertex_of.at(sorted));
                }
                std::sort(chain.begin(), chain.end());
                chains.push_back(std::move(chain));
            } while (std::next_permutation(order.begin(), order.end()));
        }
    }
    out.complex = SimplicialComplex::from_maximal(
        static_cast<int>(out.vertex_simplex.size()), chains, cap);
    return out;
}

InvolutiveComplex barycentric_subdivide(const InvolutiveComplex& ic, std::size_t cap) {
    SubdividedComplex sub = barycentric_subdivide(ic.complex(), cap);
    std::map<Simplex, int> vertex_of;
    for (std::size_t i = 0; i < sub.vertex_simplex.size(); ++i)
        vertex_of[sub.vertex_simplex[i]] = static_cast<int>(i);
    std::vector<int> g(sub.vertex_simplex.size());
    for (std::size_t i = 0; i < sub.vertex_simplex.size(); ++i)
        g[i] = vertex_of.at(ic.map_simplex(sub.vertex_simplex[i]));
    return InvolutiveComplex(std::move(sub.complex), std::move(g));
}

InvolutiveComplex regularize(const InvolutiveComplex& ic, std::size_t cap) {
    InvolutiveComplex out = ic;
    for (int round = 0; round < 2 && !out.is_regular(); ++round)
        out = barycentric_subdivide(out, cap);
    require(out.is_regular(), errc::internal,
            "two barycentric subdivisions did not regularize the action");
    return out;
}

std::vector<Simplex> maximal_simplices(const SimplicialComplex& k) {
    std::vector<Simplex> out;
    for (int q = 0; q <= k.dim(); ++q)
        for (const Simplex& s : k.simplices(q)) {
            bool maximal = true;
            for (const Simplex& t : k.simplices(q + 1))
                if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                    maximal = false;
                    break;
                }
            if (maximal) out.push_back(s);
        }
    return out;
}

SimplicialComplex product_complex(const SimplicialComplex& a,
                                  const SimplicialComplex& b, std::size_t cap) {
    const int nb = b.vertex_count();
    std::vector<Simplex> tops;
    std::vector<Simplex> amax = maximal_simplices(a), bmax = maximal_simplices(b);
    for (const Simplex& s : amax) {
        for (const Simplex& t : bmax) {
            const std::size_t p = s.size() - 1, q = t.size() - 1;
            // monotone lattice paths from (0,0) to (p,q)
            std::vector<std::pair<std::size_t, std::size_t>> path{{0, 0}};
            auto emit = [&](const auto& pts) {
                Simplex chain;
                for (auto [i, j] : pts) chain.push_back(s[i] * nb + t[j]);
                std::sort(chain.begin(), chain.end());
                tops.push_back(std::move(chain));
            };
            // iterative DFS over R/U steps
            struct Frame {
                std::size_t i, j;
                int next;  // 0 = try right, 1 = try up, 2 = done
            };
            std::vector<Frame> stack{{0, 0, 0}};
            path.assign(1, {0, 0});
            while (!stack.empty()) {
                Frame& f = stack.back();
                if (f.i == p && f.j == q) {
                    emit(path);
                    stack.pop_back();
                    path.pop_back();
                    continue;
                }
                if (f.next == 0) {
                    f.next = 1;
                    if (f.i < p) {
                        stack.push_back({f.i + 1, f.j, 0});
                        path.push_back({stack.back().i, stack.back().j});
                        continue;
                    }
                }
                if (f.next == 1) {
                    f.next = 2;
                    if (f.j < q) {
                        stack.push_back({f.i, f.j + 1, 0});
                        path.push_back({stack.back().i, stack.back().j});
                        continue;
                    }
                }
                stack.pop_back();
                path.pop_back();
            }
        }
    }
    return SimplicialComplex::from_maximal(a.vertex_count() * nb, tops, cap);
}

ComplexPair quotient_pair(const InvolutiveComplex& ic) {
    QuotientComplex q = quotient_complex(ic);
    FixedSubcomplex f = fixed_subcomplex(ic);
    std::vector<int> embed(f.complex.vertex_count());
    for (int v = 0; v < f.complex.vertex_count(); ++v)
        embed[v] = q.vertex_orbit[f.vertex_in_parent[v]];
    return ComplexPair(std::move(q.complex), std::move(f.complex), std::move(embed));
}

}  // namespace equivar
