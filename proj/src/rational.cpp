#include "equivar/rational.hpp"

#include <algorithm>

namespace equivar::exact {

SparseVec add_scaled(const SparseVec& a, const Int& ca, const SparseVec& b, const Int& cb) {
    SparseVec out;
    out.entries.reserve(a.entries.size() + b.entries.size());
    std::size_t i = 0, j = 0;
    while (i < a.entries.size() || j < b.entries.size()) {
        if (j == b.entries.size() ||
            (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
            Int v = ca * a.entries[i].second;
            if (v != 0) out.entries.emplace_back(a.entries[i].first, std::move(v));
            ++i;
        } else if (i == a.entries.size() || b.entries[j].first < a.entries[i].first) {
            Int v = cb * b.entries[j].second;
            if (v != 0) out.entries.emplace_back(b.entries[j].first, std::move(v));
            ++j;
        } else {
            Int v = ca * a.entries[i].second + cb * b.entries[j].second;
            if (v != 0) out.entries.emplace_back(a.entries[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

void normalize_content(SparseVec& v) {
    if (v.entries.empty()) return;
    Int g = 0;
    for (const auto& [idx, val] : v.entries) {
        g = boost::multiprecision::gcd(g, val);
        if (g == 1) break;
    }
    if (v.entries.front().second < 0) g = -g;
    if (g != 1 && g != 0)
        for (auto& [idx, val] : v.entries) val /= g;
}

namespace {

Int entry_at(const SparseVec& v, int idx) {
    auto it = std::lower_bound(
        v.entries.begin(), v.entries.end(), idx,
        [](const std::pair<int, Int>& e, int i) { return e.first < i; });
    return it != v.entries.end() && it->first == idx ? it->second : Int(0);
}

}  // namespace

bool IntEchelon::insert(SparseVec v) {
    normalize_content(v);
    // One ascending pass suffices: the basis is mutually reduced, so clearing
    // one pivot never reintroduces another.
    for (const SparseVec& b : basis_) {
        if (v.zero()) return false;
        Int coeff = entry_at(v, b.pivot());
        if (coeff != 0) {
            v = add_scaled(v, b.pivot_value(), b, -coeff);
            normalize_content(v);
        }
    }
    if (v.zero()) return false;

    // clear the new pivot from the existing basis to stay mutually reduced
    for (SparseVec& b : basis_) {
        Int coeff = entry_at(b, v.pivot());
        if (coeff != 0) {
            b = add_scaled(b, v.pivot_value(), v, -coeff);
            normalize_content(b);
        }
    }
    auto pos = std::lower_bound(
        basis_.begin(), basis_.end(), v.pivot(),
        [](const SparseVec& b, int p) { return b.pivot() < p; });
    basis_.insert(pos, std::move(v));
    return true;
}

std::optional<std::vector<Rat>> IntEchelon::coordinates(const SparseVec& v) const {
    // with a mutually reduced basis the coordinate at each pivot is direct
    std::vector<Rat> coords(basis_.size());
    std::vector<std::pair<int, Rat>> residue;
    for (const auto& [idx, val] : v.entries) residue.emplace_back(idx, Rat(val));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const int p = basis_[i].pivot();
        auto it = std::lower_bound(
            residue.begin(), residue.end(), p,
            [](const std::pair<int, Rat>& e, int idx) { return e.first < idx; });
        if (it == residue.end() || it->first != p) continue;
        Rat c = it->second / Rat(basis_[i].pivot_value());
        coords[i] = c;
        // residue -= c * basis_[i]
        std::vector<std::pair<int, Rat>> next;
        next.reserve(residue.size() + basis_[i].entries.size());
        std::size_t a = 0, b = 0;
        while (a < residue.size() || b < basis_[i].entries.size()) {
            if (b == basis_[i].entries.size() ||
                (a < residue.size() && residue[a].first < basis_[i].entries[b].first)) {
                next.push_back(residue[a++]);
            } else if (a == residue.size() ||
                       basis_[i].entries[b].first < residue[a].first) {
                Rat val = -c * Rat(basis_[i].entries[b].second);
                if (val != 0) next.emplace_back(basis_[i].entries[b].first, val);
                ++b;
            } else {
                Rat val = residue[a].second - c * Rat(basis_[i].entries[b].second);
                if (val != 0) next.emplace_back(residue[a].first, val);
                ++a;
                ++b;
            }
        }
        residue = std::move(next);
    }
    if (!residue.empty()) return std::nullopt;
    return coords;
}

std::vector<SparseVec> boundary_columns(const SimplicialComplex& k, int q) {
    std::vector<SparseVec> cols;
    const auto& simplices = k.simplices(q);
    cols.resize(simplices.size());
    if (q == 0) return cols;  // boundary of vertices is zero
    for (std::size_t j = 0; j < simplices.size(); ++j) {
        const Simplex& s = simplices[j];
        std::vector<std::pair<int, Int>> entries;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex f;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) f.push_back(s[i]);
            entries.emplace_back(k.index_of(f), drop % 2 == 0 ? 1 : -1);
        }
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        cols[j].entries = std::move(entries);
    }
    return cols;
}

int map_sign(const Simplex& s, const std::vector<int>& vertex_map) {
    std::vector<int> image;
    image.reserve(s.size());
    for (int v : s) image.push_back(vertex_map.at(v));
    int sign = 1;
    for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = i + 1; j < image.size(); ++j) {
            if (image[i] == image[j]) return 0;
            if (image[i] > image[j]) sign = -sign;
        }
    return sign;
}

namespace {

// g# applied to a chain given in simplex coordinates of k
SparseVec apply_involution(const SimplicialComplex& k, const InvolutiveComplex& ic,
                           int q, const SparseVec& v) {
    const auto& simplices = k.simplices(q);
    std::vector<std::pair<int, Int>> entries;
    for (const auto& [idx, val] : v.entries) {
        const Simplex& s = simplices[idx];
        int sign = map_sign(s, ic.involution());
        Simplex image = ic.map_simplex(s);
        entries.emplace_back(k.index_of(image), sign * val);
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    out.entries = std::move(entries);
    return out;
}

}  // namespace

RationalHomology rational_homology_with_trace(const InvolutiveComplex& ic) {
    const SimplicialComplex& k = ic.complex();
    const int top = k.dim();
    RationalHomology out;
    if (top < 0) return out;
    out.betti.resize(top + 1);
    out.trace.resize(top + 1);

    // trace of g# on chains: setwise-invariant simplices with orientation sign
    std::vector<long long> chain_trace(top + 1, 0);
    for (int q = 0; q <= top; ++q)
        for (const Simplex& s : k.simplices(q))
            if (ic.map_simplex(s) == s)
                chain_trace[q] += map_sign(s, ic.involution());

    // echelon bases of the boundary images B_{q-1} = im(d_q), with traces
    std::vector<long long> image_trace(top + 2, 0);  // index q: trace on B_q
    std::vector<std::size_t> boundary_rank(top + 2, 0);
    for (int q = 1; q <= top; ++q) {
        IntEchelon echelon;
        for (SparseVec& col : boundary_columns(k, q)) echelon.insert(std::move(col));
        boundary_rank[q] = echelon.rank();
        Rat trace = 0;
        for (std::size_t i = 0; i < echelon.basis().size(); ++i) {
            SparseVec mapped = apply_involution(k, ic, q - 1, echelon.basis()[i]);
            auto coords = echelon.coordinates(mapped);
            require(coords.has_value(), errc::internal,
                    "boundary image is not involution-invariant");
            trace += (*coords)[i];
        }
        require(boost::multiprecision::denominator(trace) == 1, errc::internal,
                "non-integral trace on a boundary image");
        image_trace[q - 1] =
            static_cast<long long>(boost::multiprecision::numerator(trace));
    }

    for (int q = 0; q <= top; ++q) {
        out.betti[q] = static_cast<long long>(k.count(q)) -
                       static_cast<long long>(boundary_rank[q]) -
                       static_cast<long long>(boundary_rank[q + 1]);
        out.trace[q] = chain_trace[q] - (q > 0 ? image_trace[q - 1] : 0) - image_trace[q];
    }

    // Hopf trace identity as an internal consistency check
    long long lhs = 0, rhs = 0;
    for (int q = 0; q <= top; ++q) {
        lhs += (q % 2 == 0 ? 1 : -1) * out.trace[q];
        rhs += (q % 2 == 0 ? 1 : -1) * chain_trace[q];
    }
    require(lhs == rhs, errc::internal, "trace bookkeeping violates the Hopf identity");
    return out;
}

std::pair<long long, long long> rational_homology_trace(const InvolutiveComplex& ic,
                                                        int degree) {
    RationalHomology h = rational_homology_with_trace(ic);
    if (degree < 0 || degree >= static_cast<int>(h.betti.size())) return {0, 0};
    return {h.betti[degree], h.trace[degree]};
}

}  // namespace equivar::exact
