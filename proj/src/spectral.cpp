#include "equivar/spectral.hpp"

#include <algorithm>

namespace equivar {

namespace {

// Approximate cycles of the filtered total complex:
//   Z_r^{p,*} = { x in F^p T^n : d x in F^{p+r} T^{n+1} }
// with the decreasing filtration F^p = blocks of filtration level >= p.
// Entries and differentials then follow the classical subquotient formula
//   E_r^{p,q} = Z_r^{p,q} / (Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2}).
class PageComputer {
public:
    PageComputer(const DoubleComplex& dc, SpectralKind kind) : dc_(dc), kind_(kind) {}

    int level(const DoubleComplex::Block& b) const {
        return kind_ == SpectralKind::I ? b.j : b.i;
    }

    // filtration levels present at total degree n
    int max_level(int n) const {
        int m = -1;
        for (const auto& b : dc_.blocks(n)) m = std::max(m, level(b));
        return m;
    }

    // F^p T^n as a coordinate subspace
    gf2::Subspace filtration(int p, int n) {
        std::vector<std::size_t> coords;
        for (const auto& b : dc_.blocks(n))
            if (level(b) >= p)
                for (std::size_t c = 0; c < b.size; ++c) coords.push_back(b.offset + c);
        gf2::BitMatrix basis(coords.size(), dc_.total_dim(n));
        for (std::size_t i = 0; i < coords.size(); ++i) basis.set(i, coords[i], true);
        return gf2::Subspace::span(basis);
    }

    // rows of the total differential T^n -> T^{n+1} landing in level exactly l
    const gf2::BitMatrix& rows_at_level(int n, int l) {
        auto key = std::make_pair(n, l);
        auto it = row_cache_.find(key);
        if (it != row_cache_.end()) return it->second;
        const gf2::BitMatrix& d = dc_.total_differential(n);
        std::vector<std::size_t> rows;
        for (const auto& b : dc_.blocks(n + 1))
            if (level(b) == l)
                for (std::size_t r = 0; r < b.size; ++r) rows.push_back(b.offset + r);
        gf2::BitMatrix sub(rows.size(), d.cols());
        for (std::size_t r = 0; r < rows.size(); ++r) sub.xor_row_from(r, d, rows[r]);
        return row_cache_.emplace(key, std::move(sub)).first->second;
    }

    // {x in s : constraints x = 0}
    static gf2::Subspace restrict(const gf2::Subspace& s,
                                  const gf2::BitMatrix& constraints) {
        if (constraints.rows() == 0 || s.dim() == 0) return s;
        gf2::BitMatrix w = gf2::mul(constraints, gf2::transpose(s.basis()));
        gf2::Subspace coeff = gf2::kernel(w);
        return gf2::Subspace::span(gf2::mul(coeff.basis(), s.basis()));
    }

    // (base, bound) normal form: Z_r^{p,*} only depends on the clamped column
    // base and the exhausted constraint bound.
    std::pair<int, int> z_key(int p, int n, int r) const {
        int base = std::max(p, 0);
        int bound = std::max(p + r, base);
        bound = std::min(bound, max_level(n + 1) + 1);
        return {base, bound};
    }

    // Z_r^{p,*} at total degree n; p may be any integer, r >= 0
    const gf2::Subspace& zspace(int p, int n, int r) {
        auto [base, bound] = z_key(p, n, r);
        return zspace_by_bound(base, n, bound);
    }

    const gf2::Subspace& zspace_by_bound(int base, int n, int bound) {
        auto key = std::make_tuple(n, base, bound);
        auto it = z_cache_.find(key);
        if (it != z_cache_.end()) return it->second;
        gf2::Subspace value;
        if (bound <= base) {
            value = filtration(base, n);
        } else {
            value = restrict(zspace_by_bound(base, n, bound - 1),
                             rows_at_level(n, bound - 1));
        }
        return z_cache_.emplace(key, std::move(value)).first->second;
    }

    // d(Z_r^{p,*}) inside T^{n+1}; n must be >= 0
    const gf2::Subspace& dzspace(int p, int n, int r) {
        auto [base, bound] = z_key(p, n, r);
        auto key = std::make_tuple(n, base, bound);
        auto it = dz_cache_.find(key);
        if (it != dz_cache_.end()) return it->second;
        gf2::Subspace value = gf2::apply(dc_.total_differential(n), zspace(p, n, r));
        return dz_cache_.emplace(key, std::move(value)).first->second;
    }

    // denominator of E_r^{p,q}: Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1} at degree n
    const gf2::Subspace& denominator(int p, int n, int r) {
        auto key = std::make_tuple(n, p, r);
        auto it = den_cache_.find(key);
        if (it != den_cache_.end()) return it->second;
        gf2::Subspace value =
            n >= 1 ? gf2::sum(zspace(p + 1, n, r - 1), dzspace(p - r + 1, n - 1, r - 1))
                   : zspace(p + 1, n, r - 1);
        return den_cache_.emplace(key, std::move(value)).first->second;
    }

    std::size_t entry_dim(int p, int n, int r) {
        std::size_t zd = zspace(p, n, r).dim();
        std::size_t ad = denominator(p, n, r).dim();
        require(ad <= zd, errc::internal, "page denominator escapes the cycle space");
        return zd - ad;
    }

    std::size_t differential_rank(int p, int n, int r) {
        const gf2::Subspace& target_den = denominator(p + r, n + 1, r);
        const gf2::Subspace& moved = dzspace(p, n, r);
        return gf2::sum(moved, target_den).dim() - target_den.dim();
    }

private:
    const DoubleComplex& dc_;
    SpectralKind kind_;
    std::map<std::pair<int, int>, gf2::BitMatrix> row_cache_;
    std::map<std::tuple<int, int, int>, gf2::Subspace> z_cache_;
    std::map<std::tuple<int, int, int>, gf2::Subspace> dz_cache_;
    std::map<std::tuple<int, int, int>, gf2::Subspace> den_cache_;
};

std::pair<int, int> entry_range(const DoubleComplex& dc, SpectralKind kind, int n) {
    if (kind == SpectralKind::I)
        return {std::max(0, n - dc.window()), std::min(dc.vertical_dim(), n)};
    return {std::max(0, n - dc.vertical_dim()), std::min(dc.window(), n)};
}

}  // namespace

int stable_page(const DoubleComplex& dc) {
    return std::max(dc.vertical_dim(), 0) + 2;
}

std::vector<SpectralPage> spectral_pages(const DoubleComplex& dc, SpectralKind kind,
                                         int r_max) {
    require(r_max >= 2, errc::window_too_small, "page range must reach at least 2");
    PageComputer pc(dc, kind);
    std::vector<SpectralPage> pages;
    for (int r = 2; r <= r_max; ++r) {
        SpectralPage page;
        page.kind = kind;
        page.r = r;
        for (int n = 0; n <= dc.degree_cap(); ++n) {
            auto [lo, hi] = entry_range(dc, kind, n);
            for (int p = lo; p <= hi; ++p) {
                page.entry_dim[{p, n - p}] = pc.entry_dim(p, n, r);
                page.diff_rank[{p, n - p}] = pc.differential_rank(p, n, r);
            }
        }
        pages.push_back(std::move(page));
    }
    return pages;
}

SpectralPage infinity_page(const DoubleComplex& dc, SpectralKind kind) {
    PageComputer pc(dc, kind);
    SpectralPage page;
    page.kind = kind;
    page.r = stable_page(dc);
    for (int n = 0; n <= dc.degree_cap(); ++n) {
        auto [lo, hi] = entry_range(dc, kind, n);
        for (int p = lo; p <= hi; ++p) {
            page.entry_dim[{p, n - p}] = pc.entry_dim(p, n, page.r);
            page.diff_rank[{p, n - p}] = 0;
        }
    }
    return page;
}

}  // namespace equivar
