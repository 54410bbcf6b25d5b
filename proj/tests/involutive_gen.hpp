// Shared randomized inputs for property tests: small random complexes with
// identity, doubled-swap and mirror-glued involutions, regularized on the way
// out so Smith/engine preconditions hold.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "equivar/simplicial.hpp"

namespace testgen {

inline equivar::SimplicialComplex random_complex(std::mt19937& rng, int max_vertices,
                                                 std::size_t max_simplices) {
    int nv = 3 + static_cast<int>(rng() % std::max(1, max_vertices - 2));
    while (true) {
        std::vector<equivar::Simplex> maximal;
        int nm = 2 + static_cast<int>(rng() % 7);
        for (int i = 0; i < nm; ++i) {
            std::vector<int> pool(nv);
            for (int v = 0; v < nv; ++v) pool[v] = v;
            std::shuffle(pool.begin(), pool.end(), rng);
            int size = 1 + static_cast<int>(rng() % std::min(nv, 4));
            equivar::Simplex s(pool.begin(), pool.begin() + size);
            std::sort(s.begin(), s.end());
            maximal.push_back(std::move(s));
        }
        equivar::SimplicialComplex k =
            equivar::SimplicialComplex::from_maximal(nv, maximal);
        if (k.total_simplices() <= max_simplices && k.total_simplices() > 0) return k;
    }
}

inline equivar::InvolutiveComplex identity_on(const equivar::SimplicialComplex& k) {
    std::vector<int> id(k.vertex_count());
    for (int v = 0; v < k.vertex_count(); ++v) id[v] = v;
    return equivar::InvolutiveComplex(k, id);
}

// disjoint double with the swap involution (free action)
inline equivar::InvolutiveComplex doubled(const equivar::SimplicialComplex& k) {
    int nv = k.vertex_count();
    std::vector<equivar::Simplex> maximal;
    for (int q = 0; q <= k.dim(); ++q)
        for (const equivar::Simplex& s : k.simplices(q)) {
            maximal.push_back(s);
            equivar::Simplex shifted;
            for (int v : s) shifted.push_back(v + nv);
            maximal.push_back(shifted);
        }
    std::vector<int> g(2 * nv);
    for (int v = 0; v < nv; ++v) {
        g[v] = v + nv;
        g[v + nv] = v;
    }
    return equivar::InvolutiveComplex(
        equivar::SimplicialComplex::from_maximal(2 * nv, maximal), g);
}

// two copies of k glued along the subcomplex spanned by the first `shared`
// vertices, with the involution swapping the copies
inline equivar::InvolutiveComplex mirrored(const equivar::SimplicialComplex& k,
                                           int shared) {
    int nv = k.vertex_count();
    shared = std::min(shared, nv);
    int extra = nv - shared;
    auto relabel = [&](const equivar::Simplex& s, bool second) {
        equivar::Simplex out;
        for (int v : s)
            out.push_back(v < shared ? v : v + (second ? extra : 0));
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<equivar::Simplex> maximal;
    for (int q = 0; q <= k.dim(); ++q)
        for (const equivar::Simplex& s : k.simplices(q)) {
            maximal.push_back(relabel(s, false));
            maximal.push_back(relabel(s, true));
        }
    std::vector<int> g(shared + 2 * extra);
    for (int v = 0; v < shared; ++v) g[v] = v;
    for (int v = 0; v < extra; ++v) {
        g[shared + v] = shared + extra + v;
        g[shared + extra + v] = shared + v;
    }
    return equivar::InvolutiveComplex(
        equivar::SimplicialComplex::from_maximal(shared + 2 * extra, maximal), g);
}

/// Deterministic pool of regular involutive complexes.
inline std::vector<equivar::InvolutiveComplex> regular_pool(unsigned seed, int count,
                                                            std::size_t max_simplices) {
    std::mt19937 rng(seed);
    std::vector<equivar::InvolutiveComplex> out;
    while (static_cast<int>(out.size()) < count) {
        equivar::SimplicialComplex k = random_complex(rng, 7, max_simplices / 4);
        switch (out.size() % 3) {
            case 0:
                out.push_back(identity_on(k));
                break;
            case 1:
                out.push_back(equivar::regularize(doubled(k)));
                break;
            default:
                out.push_back(equivar::regularize(
                    mirrored(k, 1 + static_cast<int>(rng() % 3))));
                break;
        }
        if (out.back().complex().total_simplices() > max_simplices) out.pop_back();
    }
    return out;
}

}  // namespace testgen
