#include "equivar/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "equivar/complex_io.hpp"
#include "equivar/double_complex.hpp"
#include "equivar/engine.hpp"
#include "equivar/fixtures.hpp"
#include "equivar/rational.hpp"
#include "equivar/smith.hpp"
#include "equivar/spectral.hpp"
#include "equivar/surface.hpp"

namespace equivar::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

int exit_code_for(errc code) {
    switch (code) {
        case errc::parse_error:
        case errc::invalid_permutation:
        case errc::non_simplicial_map:
        case errc::simplex_cap_exceeded:
            return 3;
        case errc::internal:
            return 4;
        default:
            return 2;
    }
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

void flatten_text(const ordered_json& j, const std::string& prefix,
                  std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten_text(value, prefix.empty() ? key : prefix + "." + key, rows);
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& v : j) scalars = scalars && !v.is_structured();
        if (scalars) {
            std::string line;
            for (const auto& v : j) {
                if (!line.empty()) line += " ";
                line += v.dump();
            }
            rows.emplace_back(prefix, line);
        } else {
            std::size_t idx = 0;
            for (const auto& v : j)
                flatten_text(v, prefix + "[" + std::to_string(idx++) + "]", rows);
        }
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

void emit(const ordered_json& report, const std::string& format, std::ostream& out) {
    if (format == "text") {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten_text(report, "", rows);
        std::size_t width = 0;
        for (const auto& [k, v] : rows) width = std::max(width, k.size());
        for (const auto& [k, v] : rows)
            out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
    } else {
        out << report.dump(2) << "\n";
    }
}

struct Session {
    std::string format = "json";
    bool no_subdivide = false;
    int max_degree = -1;  // -1: dim + 3
    std::string file_path;
    std::size_t cap = default_simplex_cap;

    ordered_json report;
    bool any_hypothesis_failed = false;
    bool any_property_failed = false;

    InvolutiveComplex load() {
        std::ifstream in(file_path);
        require(in.good(), errc::parse_error, "cannot open file: " + file_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::string bytes = buffer.str();
        report["input_digest"] = fnv1a_digest(bytes);
        LoadOptions options;
        options.auto_regularize = !no_subdivide;
        options.simplex_cap = cap;
        return load_involutive(parse_complex_json(bytes), options);
    }

    int degree_cap(const InvolutiveComplex& ic) const {
        return max_degree >= 0 ? max_degree : ic.complex().dim() + 3;
    }

    void hypothesis(const std::string& name, bool ok) {
        report["hypothesis_checks"][name] = ok;
        any_hypothesis_failed = any_hypothesis_failed || !ok;
    }
    void property(const std::string& name, bool ok) {
        report["property_checks"][name] = ok;
        any_property_failed = any_property_failed || !ok;
    }

    int finish(std::ostream& out) {
        emit(report, format, out);
        if (any_property_failed) return 4;
        if (any_hypothesis_failed) return 2;
        return 0;
    }
};

ordered_json page_json(const SpectralPage& page) {
    ordered_json entries = ordered_json::array();
    for (const auto& [key, dim] : page.entry_dim) {
        ordered_json e;
        e["p"] = key.first;
        e["q"] = key.second;
        e["dim"] = dim;
        e["d_rank"] = page.rank_out(key.first, key.second);
        entries.push_back(std::move(e));
    }
    ordered_json j;
    j["r"] = page.r;
    j["entries"] = std::move(entries);
    return j;
}

void run_cohomology(Session& s, std::ostream& out, int& code) {
    InvolutiveComplex ic = s.load();
    const SimplicialComplex& k = ic.complex();
    ordered_json& results = s.report["results"];
    results["dims"] = mod2_cohomology_dims(k);
    ordered_json counts = ordered_json::array();
    for (int q = 0; q <= k.dim(); ++q) counts.push_back(k.count(q));
    results["simplex_counts"] = std::move(counts);
    results["euler_characteristic"] = k.euler_characteristic();
    results["components"] = k.component_count();
    code = s.finish(out);
}

void run_equivariant(Session& s, std::ostream& out, int& code) {
    InvolutiveComplex ic = s.load();
    int cap = s.degree_cap(ic);
    DoubleComplex dc(ic, cap);
    s.report["results"]["dims"] = total_equivariant_dims(dc, cap);
    code = s.finish(out);
}

void run_pages(Session& s, const std::string& kind_name, int max_page,
               std::ostream& out, int& code) {
    InvolutiveComplex ic = s.load();
    SpectralKind kind = kind_name == "II" ? SpectralKind::II : SpectralKind::I;
    int cap = s.degree_cap(ic);
    DoubleComplex dc(ic, cap);
    int r_max = max_page > 0 ? max_page : stable_page(dc);
    ordered_json pages = ordered_json::array();
    for (const SpectralPage& page : spectral_pages(dc, kind, r_max))
        pages.push_back(page_json(page));
    s.report["results"]["kind"] = kind_name;
    s.report["results"]["pages"] = std::move(pages);
    s.report["results"]["infinity"] = page_json(infinity_page(dc, kind));
    code = s.finish(out);
}

void run_smith(Session& s, std::ostream& out, int& code) {
    InvolutiveComplex ic = s.load();
    s.hypothesis("regular_action", ic.is_regular());
    SmithSequence sm = build_smith_sequence(ic);
    SmithReport rep = image_criterion(sm);
    HarnackResult harnack = harnack_thom(ic);

    ordered_json& results = s.report["results"];
    results["dim_rel"] = sm.dim_rel;
    results["dim_fixed"] = sm.dim_fixed;
    results["dim_k"] = sm.dim_k;
    results["dim_im_i"] = rep.dim_im_i;
    results["dim_invariant"] = rep.dim_invariant;
    results["composite_dim"] = rep.composite_dim;
    ordered_json sat = ordered_json::array();
    for (bool b : rep.saturated) sat.push_back(b);
    results["saturated"] = std::move(sat);
    results["all_saturated"] = rep.all_saturated;
    results["harnack_lhs"] = harnack.lhs;
    results["harnack_rhs"] = harnack.rhs;
    results["harnack_slack"] = harnack.slack;
    LefschetzResult lf = lefschetz_check(ic);
    results["lefschetz_number"] = lf.lefschetz_number;
    results["chi_fixed"] = lf.chi_fixed;

    s.property("exact", smith_exact(sm));
    s.property("transfer_identity", smith_transfer_identity(sm));
    s.property("boundary_identity", smith_boundary_identity(sm));
    s.property("image_inside_invariants", rep.image_inside_invariants);
    code = s.finish(out);
}

void run_obstruction(Session& s, std::ostream& out, int& code) {
    InvolutiveComplex ic = s.load();
    ObstructionReport rep = brauer_obstruction(ic);
    s.hypothesis("regular_action", true);
    s.hypothesis("fixed_set_nonempty", true);
    ordered_json& results = s.report["results"];
    results["s"] = rep.s;
    results["dim_ker_istar"] = rep.dim_ker_istar;
    results["dim_im_d2_11"] = rep.dim_im_d2_11;
    results["dim_ker_d3_02"] = rep.dim_ker_d3_02;
    results["surjective"] = rep.surjective;
    s.property("d2_image_inside_ker_istar", rep.dim_im_d2_11 <= rep.dim_ker_istar);
    code = s.finish(out);
}

void run_krasnov(Session& s, std::ostream& out, int& code) {
    InvolutiveComplex ic = s.load();
    KrasnovResult kr = krasnov_test(ic);
    ordered_json& results = s.report["results"];
    results["degenerate"] = kr.degenerate;
    results["lhs"] = kr.lhs;
    results["rhs"] = kr.rhs;
    code = s.finish(out);
}

void run_lefschetz(Session& s, std::ostream& out, int& code) {
    InvolutiveComplex ic = s.load();
    LefschetzResult lf = lefschetz_check(ic);
    ordered_json& results = s.report["results"];
    results["lefschetz_number"] = lf.lefschetz_number;
    results["chi_fixed"] = lf.chi_fixed;
    results["consistent"] = lf.consistent;
    if (lf.specialized_available) results["chi_from_b2"] = lf.chi_from_b2;
    s.property("lefschetz_equals_chi_fixed", lf.consistent);
    code = s.finish(out);
}

void run_cross_check(Session& s, const HodgeInput& hodge, std::ostream& out,
                     int& code) {
    InvolutiveComplex ic = s.load();
    CrossCheckReport rep = cross_check_surface(ic, hodge);
    s.hypothesis("dim_four", rep.dim_four);
    s.hypothesis("fixed_set_nonempty", rep.fixed_nonempty);
    s.hypothesis("h1_quotient_zero", rep.h1_quotient_zero);
    s.hypothesis("h3_quotient_zero", rep.h3_quotient_zero);
    ordered_json& results = s.report["results"];
    ordered_json profile;
    profile["b1_mod2"] = rep.profile.b1_mod2;
    profile["b2"] = rep.profile.b2;
    profile["h2_mod2"] = rep.profile.h2_mod2;
    profile["h2G_mod2"] = rep.profile.h2G_mod2;
    profile["b2_plus"] = rep.profile.b2_plus;
    profile["s"] = rep.profile.s;
    profile["total_fixed_betti"] = rep.profile.total_fixed_betti;
    results["profile"] = std::move(profile);
    results["formula_dims"] = rep.formula_dims;
    results["engine_dims"] = rep.engine_dims;
    results["brauer_dim"] = rep.routes.via_04;
    results["chi_formula"] = rep.chi_formula;
    results["chi_fixed"] = rep.chi_fixed;
    s.property("formula_equals_engine", rep.formula_dims == rep.engine_dims);
    s.property("chi_match", rep.chi_formula == rep.chi_fixed);
    code = s.finish(out);
}

void run_verify(Session& s, std::ostream& out, int& code) {
    InvolutiveComplex ic = s.load();
    const SimplicialComplex& k = ic.complex();
    s.hypothesis("regular_action", ic.is_regular());

    int cap = s.degree_cap(ic);
    DoubleComplex dc(ic, cap);

    bool commute = true;
    for (int j = 0; j + 1 <= dc.vertical_dim(); ++j)
        commute = commute && gf2::mul(dc.coboundary(j), dc.horizontal(j)) ==
                                 gf2::mul(dc.horizontal(j + 1), dc.coboundary(j));
    s.property("horizontal_vertical_commute", commute);

    auto dims = total_equivariant_dims(dc, cap);
    s.report["results"]["equivariant_dims"] = dims;

    auto fixed = fixed_subcomplex(ic);
    auto fixed_dims = mod2_cohomology_dims(fixed.complex);
    auto quot_dims = mod2_cohomology_dims(quotient_complex(ic).complex);
    std::size_t fixed_total = 0;
    for (auto d : fixed_dims) fixed_total += d;

    // one page sweep per kind; the stable page is E_infinity
    Mod2Cohomology hk(k);
    bool converge = true, monotone = true, vanish_band = true, ident_I = true,
         ident_II = true, ii_zero = true;
    for (SpectralKind kind : {SpectralKind::I, SpectralKind::II}) {
        auto pages = spectral_pages(dc, kind, stable_page(dc));
        const SpectralPage& inf = pages.back();
        for (int n = 0; n <= cap; ++n) {
            std::size_t total = 0;
            for (const auto& [key, d] : inf.entry_dim)
                if (key.first + key.second == n) total += d;
            converge = converge && total == dims[n];
        }
        for (std::size_t i = 0; i + 1 < pages.size(); ++i)
            for (const auto& [key, d] : pages[i + 1].entry_dim)
                monotone = monotone && d <= pages[i].dim(key.first, key.second);
        if (kind == SpectralKind::I) {
            for (const auto& page : pages)
                for (const auto& [key, rk] : page.diff_rank)
                    if (key.second != page.r - 1) vanish_band = vanish_band && rk == 0;
            for (const auto& [key, d] : pages[0].entry_dim) {
                auto [p, q] = key;
                std::size_t expect =
                    q == 0 ? (p < static_cast<int>(quot_dims.size()) ? quot_dims[p] : 0)
                           : (p < static_cast<int>(fixed_dims.size()) ? fixed_dims[p]
                                                                      : 0);
                ident_I = ident_I && d == expect;
            }
        } else {
            for (const auto& page : pages)
                ii_zero = ii_zero && page.all_differentials_zero();
            for (const auto& [key, d] : pages[0].entry_dim) {
                auto [p, q] = key;
                std::size_t expect = 0;
                if (q <= k.dim()) {
                    gf2::BitMatrix g =
                        induced_map_mod2(k, hk, k, hk, ic.involution(), q);
                    auto [h0, hp] = group_cohomology_dims(g);
                    expect = p == 0 ? h0 : hp;
                }
                ident_II = ident_II && d == expect;
            }
        }
    }
    s.property("convergence", converge);
    s.property("page_monotonicity", monotone);
    s.property("kind_I_differentials_off_band_vanish", vanish_band);
    s.property("kind_I_page2_identification", ident_I);
    s.property("kind_II_page2_identification", ident_II);

    if (ic.trivial()) {
        bool partial = true;
        std::size_t acc = 0;
        auto kdims = mod2_cohomology_dims(k);
        for (int n = 0; n <= cap; ++n) {
            if (n < static_cast<int>(kdims.size())) acc += kdims[n];
            partial = partial && dims[n] == acc;
        }
        s.property("trivial_action_partial_sums", partial);
    }

    if (k.dim() + 2 <= cap) {
        s.property("stabilization",
                   dims[k.dim() + 1] == fixed_total && dims[k.dim() + 2] == fixed_total);
    }

    if (fixed.complex.total_simplices() == 0) {
        bool free_cmp = true;
        for (int n = 0; n <= cap; ++n)
            free_cmp = free_cmp &&
                       dims[n] == (n < static_cast<int>(quot_dims.size())
                                       ? quot_dims[n]
                                       : 0);
        s.property("free_action_quotient_comparison", free_cmp);
    }

    KrasnovResult kr = krasnov_test(ic);
    HarnackResult harnack = harnack_thom(ic);
    SmithSequence sm = build_smith_sequence(ic);
    SmithReport smr = image_criterion(sm);
    s.property("krasnov_equivalence", kr.degenerate == ii_zero &&
                                          (harnack.slack == 0) == kr.degenerate &&
                                          smr.all_saturated == kr.degenerate);
    s.property("smith_exact", smith_exact(sm));
    s.property("smith_transfer_identity", smith_transfer_identity(sm));
    s.property("smith_boundary_identity", smith_boundary_identity(sm));

    LefschetzResult lf = lefschetz_check(ic);
    s.property("lefschetz_equals_chi_fixed", lf.consistent);
    code = s.finish(out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Session session;
    if (const char* cap_env = std::getenv("EQUIVAR_SIMPLEX_CAP"))
        session.cap = static_cast<std::size_t>(std::strtoull(cap_env, nullptr, 10));

    CLI::App app{"equivariant mod-2 cohomology of involutive simplicial complexes"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", session.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--no-subdivide", session.no_subdivide,
                 "skip automatic regularization on load");
    app.add_option("--max-degree", session.max_degree,
                   "top equivariant degree (default: dim + 3)");

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", session.file_path, "complex JSON file")
            ->required();
    };

    CLI::App* cohomology = app.add_subcommand("cohomology", "mod-2 cohomology dims");
    add_file(cohomology);
    CLI::App* equivariant =
        app.add_subcommand("equivariant", "total equivariant cohomology dims");
    add_file(equivariant);

    CLI::App* pages = app.add_subcommand("pages", "spectral page entries and ranks");
    add_file(pages);
    std::string kind = "I";
    int max_page = -1;
    pages->add_option("--kind", kind, "spectral sequence kind")
        ->check(CLI::IsMember({"I", "II"}));
    pages->add_option("--max-page", max_page, "last page to report");

    CLI::App* smith = app.add_subcommand("smith", "Smith sequence report");
    add_file(smith);
    CLI::App* obstruction =
        app.add_subcommand("obstruction", "surjectivity obstruction report");
    add_file(obstruction);
    CLI::App* krasnov = app.add_subcommand("krasnov", "degeneration criterion");
    add_file(krasnov);
    CLI::App* lefschetz = app.add_subcommand("lefschetz", "fixed point bookkeeping");
    add_file(lefschetz);
    CLI::App* verify = app.add_subcommand("verify", "full invariant suite");
    add_file(verify);

    CLI::App* cross = app.add_subcommand("cross-check", "engine vs formulas");
    add_file(cross);
    HodgeInput hodge;
    cross->add_option("--h20", hodge.h20, "dim H^{2,0}");
    cross->add_option("--h11minus", hodge.h11_minus, "dim H^{1,1}_-");
    cross->add_option("--rhoplus", hodge.rho_plus, "invariant Picard rank");

    CLI::App* formulas = app.add_subcommand("formulas", "closed-form evaluators");
    formulas->require_subcommand(1);

    CLI::App* f_etale = formulas->add_subcommand("etale", "etale dimension formulas");
    SurfaceCohomologyProfile profile;
    int up_to = 4;
    f_etale->add_option("--b1", profile.b1_mod2, "dim H^1(X(C);F2)");
    f_etale->add_option("--h2", profile.h2_mod2, "dim H^2(X(C);F2)");
    f_etale->add_option("--h2g", profile.h2G_mod2, "dim H^2(X(C);F2)^G");
    f_etale->add_option("--up-to", up_to, "top degree reported");

    CLI::App* f_kummer = formulas->add_subcommand("kummer", "Kummer bookkeeping");
    long long h2_et = 0, pic2 = 0;
    f_kummer->add_option("--h2et", h2_et, "dim H^2_et")->required();
    f_kummer->add_option("--pic2", pic2, "dim Pic/2Pic")->required();

    CLI::App* f_brauer = formulas->add_subcommand("brauer", "three-route dimension");
    HodgeInput brauer_hodge;
    f_brauer->add_option("--b1", profile.b1_mod2, "dim H^1(X(C);F2)");
    f_brauer->add_option("--b2", profile.b2, "second Betti number");
    f_brauer->add_option("--h2", profile.h2_mod2, "dim H^2(X(C);F2)");
    f_brauer->add_option("--h2g", profile.h2G_mod2, "dim H^2(X(C);F2)^G");
    f_brauer->add_option("--b2plus", profile.b2_plus, "dim H^2(X(C);C)^G");
    f_brauer->add_option("--s", profile.s, "components of X(R)")->required();
    f_brauer->add_option("--fixed-betti", profile.total_fixed_betti,
                         "dim H^*(X(R);F2)")
        ->required();
    f_brauer->add_option("--h20", brauer_hodge.h20, "dim H^{2,0}");
    f_brauer->add_option("--h11minus", brauer_hodge.h11_minus, "dim H^{1,1}_-");
    f_brauer->add_option("--rhoplus", brauer_hodge.rho_plus, "invariant Picard rank");

    CLI::App* f_euler = formulas->add_subcommand("lefschetz-euler", "chi(X(R))");
    long long b2_plus = 0, b2 = 0;
    f_euler->add_option("--b2plus", b2_plus, "(b2)_+")->required();
    f_euler->add_option("--b2", b2, "b2")->required();

    CLI::App* f_enriques = formulas->add_subcommand("enriques", "lattice formulas");
    EnriquesLatticeInvariants inv;
    long long expected_snor = -1, expected_sor = -1;
    bool one_lifting_empty = false;
    int delta = -1;
    f_enriques->add_option("--r", inv.r_theta, "r(theta)")->required();
    f_enriques->add_option("--a", inv.a_theta, "a(theta)")->required();
    f_enriques->add_option("--alpha", inv.alpha_sigma, "alpha(sigma)")->required();
    f_enriques->add_option("--delta", delta, "common value of the two deltas");
    f_enriques->add_option("--delta1", inv.delta1, "first delta");
    f_enriques->add_option("--delta2", inv.delta2, "second delta");
    f_enriques->add_option("--dimHminus", inv.dim_h_minus, "dim H(sigma)_-");
    f_enriques->add_option("--dimHcap", inv.dim_hperp_cap,
                           "dim H(sigma)_+^perp cap H(sigma)_-");
    f_enriques->add_option("--expect-snor", expected_snor, "cross-check s_nor");
    f_enriques->add_option("--expect-sor", expected_sor, "cross-check s_or");
    f_enriques->add_flag("--one-lifting-empty", one_lifting_empty,
                         "declare one lifting without real points");

    CLI::App* f_bounds = formulas->add_subcommand("enriques-bounds", "bound checks");
    long long bounds_b = 0, bounds_s = 0;
    int bounds_eps = 0;
    bool real_empty = false;
    f_bounds->add_option("--b", bounds_b, "b(Y)")->required();
    f_bounds->add_option("--epsilon", bounds_eps, "epsilon(Y)")->required();
    f_bounds->add_option("--s", bounds_s, "components of Y(R)")->required();
    f_bounds->add_flag("--real-empty", real_empty, "Y(R) is empty");

    CLI::App* fixtures_cmd =
        app.add_subcommand("fixtures", "emit built-in desk-scale models");
    std::string fixture_name;
    fixtures_cmd->add_option("name", fixture_name, "fixture name");

    std::vector<std::string> argv_storage = args;
    std::vector<const char*> argv;
    argv.push_back("equivar");
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        ordered_json j;
        j["error"]["code"] = "parse-error";
        j["error"]["message"] = e.what();
        emit(j, session.format, out);
        err << e.what() << "\n";
        return 3;
    }

    std::string command;
    for (const std::string& a : args) {
        if (!command.empty()) command += " ";
        command += a;
    }
    session.report["command"] = command;

    int code = 0;
    try {
        if (*cohomology) {
            run_cohomology(session, out, code);
        } else if (*equivariant) {
            run_equivariant(session, out, code);
        } else if (*pages) {
            run_pages(session, kind, max_page, out, code);
        } else if (*smith) {
            run_smith(session, out, code);
        } else if (*obstruction) {
            run_obstruction(session, out, code);
        } else if (*krasnov) {
            run_krasnov(session, out, code);
        } else if (*lefschetz) {
            run_lefschetz(session, out, code);
        } else if (*cross) {
            run_cross_check(session, hodge, out, code);
        } else if (*verify) {
            run_verify(session, out, code);
        } else if (*formulas) {
            ordered_json& results = session.report["results"];
            if (*f_etale) {
                results["dims"] = etale_dims_formula(profile, up_to);
            } else if (*f_kummer) {
                results["dim_2br"] = brauer_dim_kummer(h2_et, pic2);
            } else if (*f_brauer) {
                BrauerRoutes routes = brauer_dim_surface(profile, brauer_hodge);
                results["via_04"] = routes.via_04;
                results["via_221"] = routes.via_221;
                results["via_223"] = routes.via_223;
                results["dim_2br"] = routes.via_04;
            } else if (*f_euler) {
                results["chi"] = lefschetz_euler(b2_plus, b2);
            } else if (*f_enriques) {
                if (delta >= 0) inv.delta1 = inv.delta2 = delta;
                if (expected_snor >= 0) inv.expected_s_nor = expected_snor;
                if (expected_sor >= 0) inv.expected_s_or = expected_sor;
                inv.both_liftings_real = !one_lifting_empty;
                EnriquesFormulaResult res = enriques_formulas(inv);
                results["b_prime"] = res.b_prime;
                results["beta"] = res.beta;
                results["b"] = res.b;
                results["s"] = res.s;
                results["s_nor"] = res.s_nor;
                results["s_or"] = res.s_or;
                results["dim_2br"] = res.dim_2br;
            } else if (*f_bounds) {
                EnriquesBoundsResult res =
                    enriques_brauer_bounds(bounds_b, bounds_eps, bounds_s, !real_empty);
                results["exact_available"] = res.exact_available;
                results["dim_2br"] = res.dim_2br;
                session.hypothesis("bound_0_7", res.bound_0_7_ok);
                session.hypothesis("bound_0_8", res.bound_0_8_ok);
                session.hypothesis("bound_0_6iii", res.bound_0_6iii_ok);
            }
            code = session.finish(out);
        } else if (*fixtures_cmd) {
            if (fixture_name.empty()) {
                session.report["results"]["names"] = fixtures::names();
                code = session.finish(out);
            } else {
                out << complex_file_to_json(
                    to_complex_file(fixtures::by_name(fixture_name)));
                code = 0;
            }
        }
    } catch (const error& e) {
        ordered_json j;
        j["error"]["code"] = errc_name(e.code());
        j["error"]["message"] = e.what();
        emit(j, session.format, out);
        err << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        ordered_json j;
        j["error"]["code"] = "internal";
        j["error"]["message"] = e.what();
        emit(j, session.format, out);
        err << e.what() << "\n";
        return 4;
    }
    return code;
}

}  // namespace equivar::cli
