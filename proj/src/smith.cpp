#include "equivar/smith.hpp"

#include <algorithm>

#include "equivar/rational.hpp"

namespace equivar {

namespace {

gf2::BitMatrix hconcat(const gf2::BitMatrix& left, const gf2::BitMatrix& right) {
    require(left.rows() == right.rows(), errc::dimension_mismatch, "hconcat rows");
    gf2::BitMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c)
            if (left.get(r, c)) out.set(r, c, true);
        for (std::size_t c = 0; c < right.cols(); ++c)
            if (right.get(r, c)) out.set(r, left.cols() + c, true);
    }
    return out;
}

}  // namespace

gf2::BitMatrix SmithSequence::i_full(int n) const {
    return hconcat(i_rel[n], i_fixed[n]);
}

gf2::BitMatrix SmithSequence::delta_full(int n) const {
    return gf2::stack(delta_rel[n], delta_fixed[n]);
}

SmithSequence build_smith_sequence(const InvolutiveComplex& ic) {
    ic.require_regular("build_smith_sequence");
    const SimplicialComplex& k = ic.complex();
    SmithSequence sm;
    sm.top = k.dim();
    if (sm.top < 0) return sm;

    FixedSubcomplex fixed = fixed_subcomplex(ic);
    QuotientComplex quot = quotient_complex(ic);
    const SimplicialComplex& f = fixed.complex;
    const SimplicialComplex& q = quot.complex;
    std::vector<int> embed(f.vertex_count());
    for (int v = 0; v < f.vertex_count(); ++v)
        embed[v] = quot.vertex_orbit[fixed.vertex_in_parent[v]];
    ComplexPair pair(q, f, embed);

    Mod2Homology hk(k), hf(f), hq(q), hrel(pair);
    const int top = sm.top;

    // projection of K-simplices onto quotient indices, and sections
    std::vector<std::vector<int>> proj(top + 1);
    std::vector<std::vector<int>> section(top + 1);  // rel coord -> K index
    for (int n = 0; n <= top; ++n) {
        const auto& simplices = k.simplices(n);
        proj[n].resize(simplices.size());
        section[n].assign(hrel.chain_dim(n), -1);
        for (std::size_t idx = 0; idx < simplices.size(); ++idx) {
            Simplex img;
            for (int v : simplices[idx]) img.push_back(quot.vertex_orbit[v]);
            std::sort(img.begin(), img.end());
            int qidx = q.index_of(img);
            proj[n][idx] = qidx;
            int rel = hrel.coord_of(n)[qidx];
            if (rel >= 0 && section[n][rel] < 0)
                section[n][rel] = static_cast<int>(idx);
        }
    }

    // F-simplex index -> K-simplex index and Q-simplex index -> F index
    std::vector<std::vector<int>> f_in_k(top + 1), f_of_q(top + 1);
    for (int n = 0; n <= top; ++n) {
        f_of_q[n].assign(q.count(n), -1);
        const auto& fs = f.simplices(n);
        f_in_k[n].resize(fs.size());
        for (std::size_t idx = 0; idx < fs.size(); ++idx) {
            Simplex in_k, in_q;
            for (int v : fs[idx]) {
                in_k.push_back(fixed.vertex_in_parent[v]);
                in_q.push_back(embed[v]);
            }
            std::sort(in_k.begin(), in_k.end());
            std::sort(in_q.begin(), in_q.end());
            f_in_k[n][idx] = k.index_of(in_k);
            f_of_q[n][q.index_of(in_q)] = static_cast<int>(idx);
        }
    }

    // chain-level maps
    std::vector<gf2::BitMatrix> transfer(top + 1), inc(top + 1), rho_chain(top + 1),
        j_chain(top + 1), g_chain(top + 1);
    for (int n = 0; n <= top; ++n) {
        transfer[n] = gf2::BitMatrix(k.count(n), hrel.chain_dim(n));
        for (std::size_t rel = 0; rel < hrel.chain_dim(n); ++rel) {
            int sigma = section[n][rel];
            require(sigma >= 0, errc::internal, "orbit without a section");
            transfer[n].set(sigma, rel, true);
            Simplex image = ic.map_simplex(k.simplices(n)[sigma]);
            transfer[n].set(k.index_of(image), rel, true);
        }
        inc[n] = chain_map_mod2(f, k, fixed.vertex_in_parent, n);
        rho_chain[n] = gf2::BitMatrix(hrel.chain_dim(n), k.count(n));
        for (std::size_t idx = 0; idx < k.count(n); ++idx) {
            int rel = hrel.coord_of(n)[proj[n][idx]];
            if (rel >= 0) rho_chain[n].set(rel, idx, true);
        }
        j_chain[n] = gf2::BitMatrix(hrel.chain_dim(n), q.count(n));
        for (std::size_t idx = 0; idx < q.count(n); ++idx) {
            int rel = hrel.coord_of(n)[idx];
            if (rel >= 0) j_chain[n].set(rel, idx, true);
        }
        g_chain[n] = chain_map_mod2(k, k, ic.involution(), n);
    }

    auto subq_dim = [](const Mod2Homology& h, int n) { return h.dim(n); };
    auto induced = [&](const gf2::BitMatrix& m, const Mod2Homology& src,
                       const Mod2Homology& tgt, int n) {
        if (n > src.max_degree() || n > tgt.max_degree())
            return gf2::BitMatrix(subq_dim(tgt, n), subq_dim(src, n));
        return gf2::induced_matrix(m, src.at(n), tgt.at(n));
    };

    sm.dim_rel.resize(top + 1);
    sm.dim_fixed.resize(top + 1);
    sm.dim_k.resize(top + 1);
    sm.dim_quot.resize(top + 1);
    sm.i_rel.resize(top + 1);
    sm.i_fixed.resize(top + 1);
    sm.rho.resize(top + 1);
    sm.delta_rel.resize(top + 1);
    sm.delta_fixed.resize(top + 1);
    sm.g_star.resize(top + 1);
    sm.j_quot.resize(top + 1);
    sm.pair_bound.resize(top + 1);

    for (int n = 0; n <= top; ++n) {
        sm.dim_rel[n] = hrel.dim(n);
        sm.dim_fixed[n] = hf.dim(n);
        sm.dim_k[n] = hk.dim(n);
        sm.dim_quot[n] = hq.dim(n);
        sm.i_rel[n] = induced(transfer[n], hrel, hk, n);
        sm.i_fixed[n] = induced(inc[n], hf, hk, n);
        sm.rho[n] = induced(rho_chain[n], hk, hrel, n);
        sm.g_star[n] = induced(g_chain[n], hk, hk, n);
        sm.j_quot[n] = induced(j_chain[n], hq, hrel, n);
    }

    // connecting maps by explicit lifting
    const gf2::BitMatrix zero_row(0, 0);
    for (int n = 0; n <= top; ++n) {
        std::size_t rel_lo = n > 0 ? sm.dim_rel[n - 1] : 0;
        std::size_t fix_lo = n > 0 ? sm.dim_fixed[n - 1] : 0;
        sm.delta_rel[n] = gf2::BitMatrix(rel_lo, sm.dim_rel[n]);
        sm.delta_fixed[n] = gf2::BitMatrix(fix_lo, sm.dim_rel[n]);
        sm.pair_bound[n] = gf2::BitMatrix(fix_lo, sm.dim_rel[n]);
        if (n == 0 || sm.dim_rel[n] == 0) continue;

        gf2::BitMatrix bk = boundary_matrix_mod2(k, n);
        gf2::BitMatrix bq_full = boundary_matrix_mod2(q, n);

        // split a boundary chain in C_{n-1}(K) into orbit and fixed coordinates
        auto split_boundary = [&](const gf2::BitMatrix& bound, gf2::BitMatrix& u,
                                  gf2::BitMatrix& w) {
            for (std::size_t idx = 0; idx < k.count(n - 1); ++idx) {
                if (!bound.get(idx, 0)) continue;
                int rel = hrel.coord_of(n - 1)[proj[n - 1][idx]];
                if (rel >= 0) {
                    if (static_cast<int>(idx) == section[n - 1][rel]) u.flip(0, rel);
                } else {
                    Simplex s = k.simplices(n - 1)[idx];
                    Simplex in_f;
                    for (int v : s) {
                        auto it = std::lower_bound(fixed.vertex_in_parent.begin(),
                                                   fixed.vertex_in_parent.end(), v);
                        in_f.push_back(static_cast<int>(
                            it - fixed.vertex_in_parent.begin()));
                    }
                    std::sort(in_f.begin(), in_f.end());
                    w.flip(0, f.index_of(in_f));
                }
            }
        };

        for (std::size_t col = 0; col < sm.dim_rel[n]; ++col) {
            // Smith connecting map: lift through the section, take the boundary,
            // split into orbit and fixed coordinates.
            gf2::BitMatrix lift(1, k.count(n));
            const gf2::BitMatrix& reps = hrel.at(n).representatives();
            for (std::size_t rel = 0; rel < hrel.chain_dim(n); ++rel)
                if (reps.get(col, rel)) lift.flip(0, section[n][rel]);
            gf2::BitMatrix bound = gf2::mul(bk, gf2::transpose(lift));  // column

            gf2::BitMatrix u(1, hrel.chain_dim(n - 1));
            gf2::BitMatrix w(1, f.count(n - 1));
            split_boundary(bound, u, w);
            gf2::BitMatrix cu = hrel.at(n - 1).coords(u, 0);
            for (std::size_t r = 0; r < rel_lo; ++r)
                if (cu.get(0, r)) sm.delta_rel[n].set(r, col, true);
            gf2::BitMatrix cw;
            if (fix_lo > 0) {
                cw = hf.at(n - 1).coords(w, 0);
                for (std::size_t r = 0; r < fix_lo; ++r)
                    if (cw.get(0, r)) sm.delta_fixed[n].set(r, col, true);
            }

            // a second lift differs by something in the image of i; the induced
            // classes must not move
            {
                gf2::BitMatrix lift2 = lift;
                if (hrel.chain_dim(n) > 0)
                    for (std::size_t r = 0; r < k.count(n); ++r)
                        if (transfer[n].get(r, 0)) lift2.flip(0, r);
                if (f.count(n) > 0)
                    for (std::size_t r = 0; r < k.count(n); ++r)
                        if (inc[n].get(r, 0)) lift2.flip(0, r);
                gf2::BitMatrix bound2 = gf2::mul(bk, gf2::transpose(lift2));
                gf2::BitMatrix u2(1, hrel.chain_dim(n - 1));
                gf2::BitMatrix w2(1, f.count(n - 1));
                split_boundary(bound2, u2, w2);
                require(hrel.at(n - 1).coords(u2, 0) == cu, errc::internal,
                        "connecting map depends on the lift");
                if (fix_lo > 0)
                    require(hf.at(n - 1).coords(w2, 0) == cw, errc::internal,
                            "connecting map depends on the lift");
            }

            // pair connecting map: lift to a quotient chain, boundary, restrict
            gf2::BitMatrix qlift(1, q.count(n));
            for (std::size_t rel = 0; rel < hrel.chain_dim(n); ++rel)
                if (reps.get(col, rel)) qlift.flip(0, hrel.kept(n)[rel]);
            gf2::BitMatrix qb = gf2::mul(bq_full, gf2::transpose(qlift));
            gf2::BitMatrix wq(1, f.count(n - 1));
            for (std::size_t idx = 0; idx < q.count(n - 1); ++idx)
                if (qb.get(idx, 0) && f_of_q[n - 1][idx] >= 0)
                    wq.flip(0, f_of_q[n - 1][idx]);
            if (n - 1 <= f.dim() && f.count(n - 1) > 0) {
                gf2::BitMatrix cw = hf.at(n - 1).coords(wq, 0);
                for (std::size_t r = 0; r < fix_lo; ++r)
                    if (cw.get(0, r)) sm.pair_bound[n].set(r, col, true);
            }
        }
    }
    return sm;
}

bool smith_exact(const SmithSequence& sm) {
    for (int n = 0; n <= sm.top; ++n) {
        gf2::BitMatrix i_n = sm.i_full(n);
        // composition rho . i vanishes and ranks match at H_n(K)
        gf2::BitMatrix ri = gf2::mul(sm.rho[n], i_n);
        if (gf2::rank(ri) != 0) return false;
        if (gf2::rank(i_n) + gf2::rank(sm.rho[n]) != sm.dim_k[n]) return false;

        // at H_n(rel): im rho = ker delta
        gf2::BitMatrix delta_n = sm.delta_full(n);
        if (gf2::rank(gf2::mul(delta_n, sm.rho[n])) != 0) return false;
        if (gf2::rank(sm.rho[n]) + gf2::rank(delta_n) != sm.dim_rel[n]) return false;

        // at the direct sum: im delta_{n+1} = ker i_n
        std::size_t delta_rank_in =
            n + 1 <= sm.top ? gf2::rank(sm.delta_full(n + 1)) : 0;
        if (n + 1 <= sm.top) {
            gf2::BitMatrix comp = gf2::mul(i_n, sm.delta_full(n + 1));
            if (gf2::rank(comp) != 0) return false;
        }
        std::size_t node_dim = sm.dim_rel[n] + sm.dim_fixed[n];
        if (delta_rank_in + gf2::rank(i_n) != node_dim) return false;
    }
    return true;
}

bool smith_transfer_identity(const SmithSequence& sm) {
    for (int n = 0; n <= sm.top; ++n) {
        gf2::BitMatrix lhs = gf2::mul(sm.i_rel[n], sm.rho[n]);
        gf2::BitMatrix rhs = sm.g_star[n];
        for (std::size_t v = 0; v < rhs.rows(); ++v) rhs.flip(v, v);  // 1 + g
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool smith_boundary_identity(const SmithSequence& sm) {
    for (int n = 0; n <= sm.top; ++n)
        if (!(sm.delta_fixed[n] == sm.pair_bound[n])) return false;
    return true;
}

SmithReport image_criterion(const SmithSequence& sm) {
    SmithReport report;
    const int top = sm.top;
    report.dim_im_i.resize(top + 1);
    report.dim_invariant.resize(top + 1);
    report.composite_dim.resize(top + 1);
    report.saturated.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        gf2::BitMatrix i_n = sm.i_full(n);
        report.dim_im_i[n] = gf2::rank(i_n);

        gf2::BitMatrix one_plus_g = sm.g_star[n];
        for (std::size_t v = 0; v < one_plus_g.rows(); ++v) one_plus_g.flip(v, v);
        report.dim_invariant[n] = sm.dim_k[n] - gf2::rank(one_plus_g);

        if (!gf2::kernel(one_plus_g).contains(gf2::image(i_n)))
            report.image_inside_invariants = false;

        std::size_t composite = 0;
        if (n + 1 <= top) {
            // the quotient route lands in ker(pair connecting map), so its
            // fixed component vanishes; what reaches rho(H^G) is the part of
            // the image inside Ker delta_n
            gf2::BitMatrix comp_fix =
                gf2::mul(sm.delta_fixed[n + 1], sm.j_quot[n + 1]);
            require(gf2::rank(comp_fix) == 0, errc::internal,
                    "quotient route leaks into the fixed component");
            gf2::BitMatrix comp_rel = gf2::mul(sm.delta_rel[n + 1], sm.j_quot[n + 1]);
            composite = gf2::intersect(gf2::image(comp_rel),
                                       gf2::kernel(sm.delta_full(n)))
                            .dim();
        }
        report.composite_dim[n] = composite;
        report.saturated[n] = composite == 0;
        report.all_saturated = report.all_saturated && report.saturated[n];
    }
    return report;
}

HarnackResult harnack_thom(const InvolutiveComplex& ic) {
    ic.require_regular("harnack_thom");
    HarnackResult out;
    out.lhs = Mod2Homology(fixed_subcomplex(ic).complex).total_dim();

    const SimplicialComplex& k = ic.complex();
    Mod2Homology hk(k);
    std::size_t invariant_total = 0;
    for (int n = 0; n <= k.dim(); ++n) {
        gf2::BitMatrix g = induced_homology_map_mod2(k, hk, k, hk, ic.involution(), n);
        for (std::size_t v = 0; v < g.rows(); ++v) g.flip(v, v);
        invariant_total += hk.dim(n) - gf2::rank(g);
    }
    out.rhs = 2 * invariant_total - hk.total_dim();
    out.slack = static_cast<long long>(out.rhs) - static_cast<long long>(out.lhs);
    require(out.slack >= 0, errc::internal, "negative Harnack slack");
    return out;
}

LefschetzResult lefschetz_check(const InvolutiveComplex& ic) {
    InvolutiveComplex reg = regularize(ic);
    exact::RationalHomology h = exact::rational_homology_with_trace(reg);

    LefschetzResult out;
    for (std::size_t n = 0; n < h.trace.size(); ++n)
        out.lefschetz_number += (n % 2 == 0 ? 1 : -1) * h.trace[n];
    out.chi_fixed = fixed_subcomplex(reg).complex.euler_characteristic();
    out.consistent = out.lefschetz_number == out.chi_fixed;

    if (reg.complex().dim() == 4 && h.betti.size() > 2 && h.betti[1] == 0) {
        long long b2 = h.betti[2];
        long long b2_plus = (b2 + h.trace[2]) / 2;
        out.specialized_available = true;
        out.chi_from_b2 = 2 + 2 * b2_plus - b2;
    }
    return out;
}

}  // namespace equivar
