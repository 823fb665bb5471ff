#include "cperm/verify.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <deque>
#include <json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cperm/codes.hpp"
#include "cperm/poly.hpp"
#include "cperm/stats.hpp"

namespace cperm {

namespace {

struct NameEntry {
    TheoremId id;
    const char* name;
};

constexpr NameEntry kNames[] = {
    {TheoremId::ell_dist, "ell-dist"},
    {TheoremId::sor_dist, "sor-dist"},
    {TheoremId::main_a, "main-a"},
    {TheoremId::main_b, "main-b"},
    {TheoremId::cor_gf_restricted, "cor-gf-restricted"},
    {TheoremId::cyc0_dist, "cyc0-dist"},
    {TheoremId::ellprime_dist, "ellprime-dist"},
    {TheoremId::phi_pointwise, "phi-pointwise"},
    {TheoremId::phi_ferrers, "phi-ferrers"},
    {TheoremId::stirling_equi, "stirling-equi"},
    {TheoremId::acode_ell, "acode-ell"},
    {TheoremId::acode_stats, "acode-stats"},
    {TheoremId::bcode_sor, "bcode-sor"},
    {TheoremId::bcode_stats, "bcode-stats"},
    {TheoremId::sor_graph_oracle_id, "sor-graph-oracle"},
    {TheoremId::length_bfs, "length-bfs"},
    {TheoremId::reflength_bfs, "reflength-bfs"},
    {TheoremId::d_psi_pointwise, "d-psi-pointwise"},
    {TheoremId::d_main, "d-main"},
    {TheoremId::d_gf, "d-gf"},
    {TheoremId::d_cor_gf, "d-cor-gf"},
    {TheoremId::d_ellprime_dist, "d-ellprime-dist"},
    {TheoremId::d_ccode_stats, "d-ccode-stats"},
    {TheoremId::d_dcode_stats, "d-dcode-stats"},
    {TheoremId::d_length_bfs, "d-length-bfs"},
};

bool is_identity(const ColoredPermutation& pi) {
    for (int k = 0; k < pi.n(); ++k) {
        if (pi.window[k].base != k + 1 || pi.window[k].color != 0) return false;
    }
    return true;
}

long long sor_checked(const ColoredPermutation& pi, const CheckOptions& opts) {
    long long s = sorting_index(pi);
    if (opts.negative_control && is_identity(pi)) s += 1;
    return s;
}

long long sor_d_checked(const ColoredPermutation& pi, const CheckOptions& opts) {
    long long s = sor_d(pi);
    if (opts.negative_control && is_identity(pi)) s += 1;
    return s;
}

// Shifts the identity's term by one power of q, mirroring the corrupted
// statistic, so generating-function checks see the same corruption the
// element-wise checks do.
MVPoly apply_negative_control(MVPoly p, int r, int n, Weighting w, bool aggregated,
                              const CheckOptions& opts) {
    if (!opts.negative_control) return p;
    const std::vector<ColoredPermutation> only_id{identity(r, n)};
    const MVPoly id_term = enumerative_gf(only_id, w, aggregated, 1);
    p -= id_term;
    p += id_term * q_power(1);
    return p;
}

using Tuple = std::vector<std::vector<int>>;

std::vector<int> bases_of(const std::vector<ColoredLetter>& letters) {
    std::vector<int> out;
    out.reserve(letters.size());
    for (const auto& l : letters) out.push_back(l.base);
    return out;
}

// Right-hand sides list color classes as 0, r-1, r-2, ..., 1.
std::vector<int> reversed_color_order(int r) {
    std::vector<int> seq{0};
    for (int t = r - 1; t >= 1; --t) seq.push_back(t);
    return seq;
}

Tuple a_side_tuple(const StatBundle& st, int r, long long first) {
    Tuple tup;
    tup.push_back({static_cast<int>(first)});
    for (int t = 0; t < r; ++t) tup.push_back(refined_bases(st.Rmil, t));
    for (int t = 0; t < r; ++t) tup.push_back(refined_bases(st.Lmil, t));
    for (int t = 0; t < r; ++t) tup.push_back(refined_bases(st.Lmal, t));
    for (int t = 0; t < r; ++t) tup.push_back(refined_bases(st.Lmap, t));
    return tup;
}

Tuple b_side_tuple(const StatBundle& st, int r, long long first) {
    Tuple tup;
    tup.push_back({static_cast<int>(first)});
    const std::vector<int> seq = reversed_color_order(r);
    for (int t : seq) tup.push_back(refined_bases(st.Cyc, t));
    for (int t : seq) tup.push_back(refined_bases(st.Lmic, t));
    for (int t : seq) tup.push_back(refined_bases(st.Lmal, t));
    for (int t : seq) tup.push_back(refined_bases(st.Lmap, t));
    return tup;
}

Tuple d_a_side_tuple(const ColoredPermutation& pi, bool with_lmal) {
    const StatBundle st = set_stats(pi);
    const TwistedDStats tw = twisted_d_stats(pi);
    Tuple tup;
    tup.push_back({static_cast<int>(length_d(pi))});
    tup.push_back(tw.RmilPlus);
    tup.push_back(tw.RmilMinus);
    tup.push_back(bases_of(st.Lmil));
    tup.push_back(bases_of(st.Lmap));
    if (with_lmal) tup.push_back(bases_of(st.Lmal));
    return tup;
}

Tuple d_b_side_tuple(const ColoredPermutation& pi, bool with_lmal, const CheckOptions& opts) {
    const StatBundle st = set_stats(pi);
    const TwistedDStats tw = twisted_d_stats(pi);
    Tuple tup;
    tup.push_back({static_cast<int>(sor_d_checked(pi, opts))});
    tup.push_back(tw.CycPlus);
    tup.push_back(tw.CycMinus);
    tup.push_back(bases_of(st.Lmic));
    tup.push_back(bases_of(st.Lmap));
    if (with_lmal) tup.push_back(bases_of(st.Lmal));
    return tup;
}

std::string tuple_text(const Tuple& tup) {
    std::string out = "(";
    for (size_t k = 0; k < tup.size(); ++k) {
        if (k > 0) out += " | ";
        if (tup[k].empty()) {
            out += "-";
        } else {
            for (size_t j = 0; j < tup[k].size(); ++j) {
                if (j > 0) out += ",";
                out += std::to_string(tup[k][j]);
            }
        }
    }
    out += ")";
    return out;
}

std::string first_term_text(const MVPoly& p) {
    std::string s = p.to_text();
    size_t cut = std::min(s.find(" + ", 1), s.find(" - ", 1));
    return cut == std::string::npos ? s : s.substr(0, cut);
}

std::string poly_mismatch_text(const std::string& label, const MVPoly& got,
                               const MVPoly& want) {
    return label + " differs from closed form; difference starts with " +
           first_term_text(got - want);
}

struct Outcome {
    bool pass = true;
    long long checked = 0;
    std::optional<std::string> cex;

    void fail(std::string message) {
        if (pass) {
            pass = false;
            cex = std::move(message);
        }
    }
};

Outcome compare_tuple_multisets(std::vector<Tuple> lhs, std::vector<Tuple> rhs) {
    Outcome out;
    out.checked = static_cast<long long>(lhs.size());
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs == rhs) return out;
    size_t k = 0;
    while (k < lhs.size() && k < rhs.size() && lhs[k] == rhs[k]) ++k;
    std::string a = k < lhs.size() ? tuple_text(lhs[k]) : "(exhausted)";
    std::string b = k < rhs.size() ? tuple_text(rhs[k]) : "(exhausted)";
    out.fail("tuple multisets diverge: lhs " + a + " vs rhs " + b);
    return out;
}

using Histogram = std::map<long long, long long>;

Outcome compare_histogram_to_poly(const Histogram& hist, const VarId& v, const MVPoly& closed,
                                  long long checked, const std::string& label) {
    Outcome out;
    out.checked = checked;
    const MVPoly got = poly_from_histogram(hist, v);
    if (!(got == closed)) out.fail(poly_mismatch_text(label, got, closed));
    return out;
}

std::vector<ColoredPermutation> family_g(int r, int n, const std::optional<FerrersBound>& f,
                                         const CheckOptions& opts) {
    if (f) return enumerate_restricted(r, n, *f, opts.enum_cap);
    return enumerate_group(r, n, opts.enum_cap);
}

std::vector<ColoredPermutation> family_d(int n, const std::optional<FerrersBound>& f,
                                         const CheckOptions& opts) {
    if (f) return enumerate_restricted_d(n, *f, opts.enum_cap);
    return enumerate_group_d(n, opts.enum_cap);
}

// --- claim bodies, one shape at a time --------------------------------------

Outcome run_ell_or_sor_dist(bool use_sor, int r, int n, const CheckOptions& opts) {
    const auto fam = family_g(r, n, std::nullopt, opts);
    Histogram hist;
    for (const auto& pi : fam) {
        hist[use_sor ? sor_checked(pi, opts) : length(pi)] += 1;
    }
    return compare_histogram_to_poly(hist, var_q(), gf_length_dist(r, n),
                                     static_cast<long long>(fam.size()),
                                     use_sor ? "sor histogram" : "length histogram");
}

Outcome run_main_a(int r, int n, const FerrersBound& f, const CheckOptions& opts) {
    const auto fam = enumerate_restricted(r, n, f, opts.enum_cap);
    std::vector<Tuple> lhs, rhs;
    lhs.reserve(fam.size());
    rhs.reserve(fam.size());
    for (const auto& pi : fam) {
        const StatBundle st = set_stats(pi);
        lhs.push_back(a_side_tuple(st, r, st.ell));
        rhs.push_back(b_side_tuple(st, r, sor_checked(pi, opts)));
    }
    return compare_tuple_multisets(std::move(lhs), std::move(rhs));
}

Outcome run_main_b(bool aggregated, int r, int n, const FerrersBound& f,
                   const CheckOptions& opts) {
    const auto fam = enumerate_restricted(r, n, f, opts.enum_cap);
    Outcome out;
    out.checked = static_cast<long long>(fam.size());
    const MVPoly closed =
        aggregated ? gf_cor_restricted(r, n, f) : gf_main_b(r, n, f);
    const MVPoly lhs =
        enumerative_gf(fam, Weighting::length_rmil_lmil, aggregated, opts.jobs);
    MVPoly rhs = enumerative_gf(fam, Weighting::sor_cyc_lmic, aggregated, opts.jobs);
    rhs = apply_negative_control(std::move(rhs), r, n, Weighting::sor_cyc_lmic, aggregated, opts);
    if (!(lhs == closed)) {
        out.fail(poly_mismatch_text("length-side generating function", lhs, closed));
    } else if (!(rhs == closed)) {
        out.fail(poly_mismatch_text("sorting-side generating function", rhs, closed));
    }
    return out;
}

Outcome run_cyc0_dist(int r, int n, const CheckOptions& opts) {
    const auto fam = family_g(r, n, std::nullopt, opts);
    Histogram hist;
    for (const auto& pi : fam) {
        hist[static_cast<long long>(refined_bases(set_stats(pi).Cyc, 0).size())] += 1;
    }
    return compare_histogram_to_poly(hist, var_t_agg(), gf_cyc0_dist(r, n),
                                     static_cast<long long>(fam.size()),
                                     "balanced-cycle histogram");
}

Outcome run_ellprime_dist(int r, int n, const CheckOptions& opts) {
    const auto fam = family_g(r, n, std::nullopt, opts);
    Histogram hist;
    for (const auto& pi : fam) hist[set_stats(pi).refl_len] += 1;
    return compare_histogram_to_poly(hist, var_t_agg(), gf_ellprime_dist(r, n),
                                     static_cast<long long>(fam.size()),
                                     "reflection-length histogram");
}

Outcome run_phi_pointwise(int r, int n, const CheckOptions& opts) {
    const auto fam = family_g(r, n, std::nullopt, opts);
    Outcome out;
    out.checked = static_cast<long long>(fam.size());
    std::set<ColoredPermutation> images;
    for (const auto& pi : fam) {
        const ColoredPermutation im = phi(pi);
        images.insert(im);
        const Tuple lhs = a_side_tuple(set_stats(pi), r, length(pi));
        const Tuple rhs = b_side_tuple(set_stats(im), r, sor_checked(im, opts));
        if (lhs != rhs) {
            out.fail("pi = " + format_window(pi) + ": " + tuple_text(lhs) +
                     " != " + tuple_text(rhs) + " at phi(pi) = " + format_window(im));
            return out;
        }
    }
    if (images.size() != fam.size()) out.fail("phi is not injective on this group");
    return out;
}

Outcome run_phi_ferrers(int r, int n, const CheckOptions& opts) {
    const auto fam = family_g(r, n, std::nullopt, opts);
    Outcome out;
    out.checked = static_cast<long long>(fam.size());
    for (const auto& pi : fam) {
        if (min_sequence(pi) != min_sequence(phi(pi))) {
            out.fail("pi = " + format_window(pi) + ": minimal bound changes under phi");
            return out;
        }
    }
    return out;
}

Outcome run_stirling_equi(int r, int n, const CheckOptions& opts) {
    const auto fam = family_g(r, n, std::nullopt, opts);
    Outcome out;
    out.checked = static_cast<long long>(fam.size());
    Histogram cyc0, rmin0, lmin0, lmax0, lmic0, coexc;
    Histogram cyc, rmin, lmin, lmax, lmic;
    for (const auto& pi : fam) {
        const StatBundle st = set_stats(pi);
        cyc0[static_cast<long long>(refined_bases(st.Cyc, 0).size())] += 1;
        rmin0[static_cast<long long>(refined_bases(st.Rmil, 0).size())] += 1;
        lmin0[static_cast<long long>(refined_bases(st.Lmil, 0).size())] += 1;
        lmax0[static_cast<long long>(refined_bases(st.Lmal, 0).size())] += 1;
        lmic0[static_cast<long long>(refined_bases(st.Lmic, 0).size())] += 1;
        coexc[n - st.refl_len] += 1;
        cyc[static_cast<long long>(st.Cyc.size())] += 1;
        rmin[static_cast<long long>(st.Rmil.size())] += 1;
        lmin[static_cast<long long>(st.Lmil.size())] += 1;
        lmax[static_cast<long long>(st.Lmal.size())] += 1;
        lmic[static_cast<long long>(st.Lmic.size())] += 1;
    }
    const std::pair<const char*, const Histogram*> balanced[] = {
        {"rmin0", &rmin0}, {"lmin0", &lmin0}, {"lmax0", &lmax0},
        {"lmic0", &lmic0}, {"n-refl_len", &coexc}};
    for (const auto& [name, h] : balanced) {
        if (*h != cyc0) {
            out.fail(std::string(name) + " histogram differs from cyc0 histogram");
            return out;
        }
    }
    const std::pair<const char*, const Histogram*> unrefined[] = {
        {"rmin", &rmin}, {"lmin", &lmin}, {"lmax", &lmax}, {"lmic", &lmic}};
    for (const auto& [name, h] : unrefined) {
        if (*h != cyc) {
            out.fail(std::string(name) + " histogram differs from cyc histogram");
            return out;
        }
    }
    return out;
}

Outcome run_acode_ell(int r, int n, const CheckOptions& opts) {
    const auto fam = family_g(r, n, std::nullopt, opts);
    Outcome out;
    out.checked = static_cast<long long>(fam.size());
    for (const auto& pi : fam) {
        if (code_weight(a_code(pi)) != length(pi)) {
            out.fail("pi = " + format_window(pi) + ": code weight != length");
            return out;
        }
    }
    return out;
}

Outcome run_acode_stats(int r, int n, const CheckOptions& opts) {
    const auto fam = family_g(r, n, std::nullopt, opts);
    Outcome out;
    out.checked = static_cast<long long>(fam.size());
    for (const auto& pi : fam) {
        const StatBundle st = set_stats(pi);
        const CodeStats cs = code_stats(a_code(pi));
        if (st.Rmil != cs.Max || st.Lmil != cs.Min || st.Lmap != cs.Rmil ||
            st.Lmal != cs.Rmip) {
            out.fail("pi = " + format_window(pi) + ": code statistics disagree");
            return out;
        }
    }
    return out;
}

Outcome run_bcode_sor(int r, int n, const CheckOptions& opts) {
    const auto fam = family_g(r, n, std::nullopt, opts);
    Outcome out;
    out.checked = static_cast<long long>(fam.size());
    for (const auto& pi : fam) {
        const StatBundle st = set_stats(pi);
        if (sor_checked(pi, opts) != sor_graph_oracle(pi)) {
            out.fail("pi = " + format_window(pi) + ": sorting index != comb-graph oracle");
            return out;
        }
        if (st.refl_len != n - static_cast<int>(refined_bases(st.Cyc, 0).size())) {
            out.fail("pi = " + format_window(pi) + ": refl_len != n - cyc0");
            return out;
        }
    }
    return out;
}

Outcome run_bcode_stats(int r, int n, const CheckOptions& opts) {
    const auto fam = family_g(r, n, std::nullopt, opts);
    Outcome out;
    out.checked = static_cast<long long>(fam.size());
    const auto mod = [&](int t) { return ((t % r) + r) % r; };
    for (const auto& pi : fam) {
        const StatBundle st = set_stats(pi);
        const CodeStats cs = code_stats(b_code(pi));
        bool ok = true;
        for (int t = 0; t < r && ok; ++t) {
            const int s = t == 0 ? 0 : mod(r - t);
            ok = refined_bases(st.Cyc, t) == refined_bases(cs.Max, s) &&
                 refined_bases(st.Lmic, t) == refined_bases(cs.Min, s) &&
                 refined_bases(st.Lmap, t) == refined_bases(cs.Rmil, s) &&
                 refined_bases(st.Lmal, t) == refined_bases(cs.Rmip, s);
        }
        if (!ok) {
            out.fail("pi = " + format_window(pi) + ": code statistics disagree");
            return out;
        }
    }
    return out;
}

Outcome run_sor_graph_oracle(int r, int n, const CheckOptions& opts) {
    const auto fam = family_g(r, n, std::nullopt, opts);
    Outcome out;
    out.checked = static_cast<long long>(fam.size());
    for (const auto& pi : fam) {
        if (sor_graph_oracle(pi) != sor_checked(pi, opts)) {
            out.fail("pi = " + format_window(pi) + ": oracle disagrees with sorting index");
            return out;
        }
    }
    return out;
}

Outcome run_length_bfs(bool reflections, int r, int n, const CheckOptions& opts) {
    const auto fam = family_g(r, n, std::nullopt, opts);
    const auto dist =
        bfs_lengths(reflections ? GenSet::reflections_t : GenSet::coxeter_g, r, n, opts.bfs_cap);
    Outcome out;
    out.checked = static_cast<long long>(fam.size());
    if (dist.size() != fam.size()) {
        out.fail("BFS reached " + std::to_string(dist.size()) + " of " +
                 std::to_string(fam.size()) + " elements");
        return out;
    }
    for (const auto& pi : fam) {
        const auto it = dist.find(pi);
        const int want = reflections ? set_stats(pi).refl_len : length(pi);
        if (it == dist.end() || it->second != want) {
            out.fail("pi = " + format_window(pi) + ": BFS distance != " +
                     (reflections ? std::string("refl_len") : std::string("length")));
            return out;
        }
    }
    return out;
}

Outcome run_d_psi_pointwise(int n, const CheckOptions& opts) {
    const auto fam = family_d(n, std::nullopt, opts);
    Outcome out;
    out.checked = static_cast<long long>(fam.size());
    std::set<ColoredPermutation> images;
    for (const auto& pi : fam) {
        const ColoredPermutation im = psi(pi);
        images.insert(im);
        const Tuple lhs = d_a_side_tuple(pi, /*with_lmal=*/false);
        const Tuple rhs = d_b_side_tuple(im, /*with_lmal=*/false, opts);
        if (lhs != rhs) {
            out.fail("pi = " + format_window(pi) + ": " + tuple_text(lhs) +
                     " != " + tuple_text(rhs) + " at psi(pi) = " + format_window(im));
            return out;
        }
    }
    if (images.size() != fam.size()) out.fail("psi is not injective on this group");
    return out;
}

Outcome run_d_main(int n, const FerrersBound& f, const CheckOptions& opts) {
    const auto fam = enumerate_restricted_d(n, f, opts.enum_cap);
    std::vector<Tuple> lhs, rhs;
    lhs.reserve(fam.size());
    rhs.reserve(fam.size());
    for (const auto& pi : fam) {
        lhs.push_back(d_a_side_tuple(pi, /*with_lmal=*/true));
        rhs.push_back(d_b_side_tuple(pi, /*with_lmal=*/true, opts));
    }
    return compare_tuple_multisets(std::move(lhs), std::move(rhs));
}

Outcome run_d_gf(bool aggregated, int n, const FerrersBound& f, const CheckOptions& opts) {
    const auto fam = enumerate_restricted_d(n, f, opts.enum_cap);
    Outcome out;
    out.checked = static_cast<long long>(fam.size());
    const MVPoly closed = aggregated ? gf_cor_d(n, f) : gf_d(n, f);
    const MVPoly lhs = enumerative_gf(fam, Weighting::d_length_rmil, aggregated, opts.jobs);
    MVPoly rhs = enumerative_gf(fam, Weighting::d_sor_cyc, aggregated, opts.jobs);
    rhs = apply_negative_control(std::move(rhs), 2, n, Weighting::d_sor_cyc, aggregated, opts);
    if (!(lhs == closed)) {
        out.fail(poly_mismatch_text("length-side generating function", lhs, closed));
    } else if (!(rhs == closed)) {
        out.fail(poly_mismatch_text("sorting-side generating function", rhs, closed));
    }
    return out;
}

Outcome run_d_ellprime_dist(int n, const CheckOptions& opts) {
    const auto fam = family_d(n, std::nullopt, opts);
    Histogram refl, cycplus;
    for (const auto& pi : fam) {
        refl[ell_tilde_d(pi)] += 1;
        cycplus[static_cast<long long>(twisted_d_stats(pi).CycPlus.size())] += 1;
    }
    Outcome out = compare_histogram_to_poly(refl, var_t_agg(), gf_ellprime_dist_d(n),
                                            static_cast<long long>(fam.size()),
                                            "type D reflection-length histogram");
    if (!out.pass) return out;
    const MVPoly got = poly_from_histogram(cycplus, var_t_agg());
    const MVPoly want = gf_cycplus_dist_d(n);
    if (!(got == want)) out.fail(poly_mismatch_text("cyc+ histogram", got, want));
    return out;
}

Outcome run_d_code_stats(bool use_dcode, int n, const CheckOptions& opts) {
    const auto fam = family_d(n, std::nullopt, opts);
    Outcome out;
    out.checked = static_cast<long long>(fam.size());
    for (const auto& pi : fam) {
        const StatBundle st = set_stats(pi);
        const TwistedDStats tw = twisted_d_stats(pi);
        const SignedCode code = use_dcode ? d_code(pi) : c_code(pi);
        const CodeStats cs = code_stats(signed_code_as_word(code));
        const std::vector<int>& plus = use_dcode ? tw.CycPlus : tw.RmilPlus;
        const std::vector<int>& minus = use_dcode ? tw.CycMinus : tw.RmilMinus;
        const std::vector<ColoredLetter>& mins = use_dcode ? st.Lmic : st.Lmil;
        const bool ok = plus == refined_bases(cs.Max, 0) &&
                        minus == refined_bases(cs.Max, 1) &&
                        bases_of(mins) == bases_of(cs.Min) &&
                        bases_of(st.Lmap) == bases_of(cs.Rmil) &&
                        bases_of(st.Lmal) == bases_of(cs.Rmip);
        if (!ok) {
            out.fail("pi = " + format_window(pi) + ": code statistics disagree");
            return out;
        }
    }
    return out;
}

Outcome run_d_length_bfs(int n, const CheckOptions& opts) {
    const auto fam = family_d(n, std::nullopt, opts);
    const auto dist = bfs_lengths(GenSet::coxeter_d, 2, n, opts.bfs_cap);
    Outcome out;
    out.checked = static_cast<long long>(fam.size());
    if (dist.size() != fam.size()) {
        out.fail("BFS reached " + std::to_string(dist.size()) + " of " +
                 std::to_string(fam.size()) + " elements");
        return out;
    }
    for (const auto& pi : fam) {
        const auto it = dist.find(pi);
        if (it == dist.end() || it->second != length_d(pi)) {
            out.fail("pi = " + format_window(pi) +
                     ": BFS distance != inv + negative-sum-pairs candidate");
            return out;
        }
    }
    return out;
}

bool claim_takes_bound(TheoremId id) {
    switch (id) {
        case TheoremId::main_a:
        case TheoremId::main_b:
        case TheoremId::cor_gf_restricted:
        case TheoremId::d_main:
        case TheoremId::d_gf:
        case TheoremId::d_cor_gf:
            return true;
        default:
            return false;
    }
}

bool claim_is_type_d(TheoremId id) {
    switch (id) {
        case TheoremId::d_psi_pointwise:
        case TheoremId::d_main:
        case TheoremId::d_gf:
        case TheoremId::d_cor_gf:
        case TheoremId::d_ellprime_dist:
        case TheoremId::d_ccode_stats:
        case TheoremId::d_dcode_stats:
        case TheoremId::d_length_bfs:
            return true;
        default:
            return false;
    }
}

Outcome run_one_shape(TheoremId id, int r, int n, const std::optional<FerrersBound>& f,
                      const CheckOptions& opts) {
    const FerrersBound bound = f ? *f : full_bound(n);
    switch (id) {
        case TheoremId::ell_dist: return run_ell_or_sor_dist(false, r, n, opts);
        case TheoremId::sor_dist: return run_ell_or_sor_dist(true, r, n, opts);
        case TheoremId::main_a: return run_main_a(r, n, bound, opts);
        case TheoremId::main_b: return run_main_b(false, r, n, bound, opts);
        case TheoremId::cor_gf_restricted: return run_main_b(true, r, n, bound, opts);
        case TheoremId::cyc0_dist: return run_cyc0_dist(r, n, opts);
        case TheoremId::ellprime_dist: return run_ellprime_dist(r, n, opts);
        case TheoremId::phi_pointwise: return run_phi_pointwise(r, n, opts);
        case TheoremId::phi_ferrers: return run_phi_ferrers(r, n, opts);
        case TheoremId::stirling_equi: return run_stirling_equi(r, n, opts);
        case TheoremId::acode_ell: return run_acode_ell(r, n, opts);
        case TheoremId::acode_stats: return run_acode_stats(r, n, opts);
        case TheoremId::bcode_sor: return run_bcode_sor(r, n, opts);
        case TheoremId::bcode_stats: return run_bcode_stats(r, n, opts);
        case TheoremId::sor_graph_oracle_id: return run_sor_graph_oracle(r, n, opts);
        case TheoremId::length_bfs: return run_length_bfs(false, r, n, opts);
        case TheoremId::reflength_bfs: return run_length_bfs(true, r, n, opts);
        case TheoremId::d_psi_pointwise: return run_d_psi_pointwise(n, opts);
        case TheoremId::d_main: return run_d_main(n, bound, opts);
        case TheoremId::d_gf: return run_d_gf(false, n, bound, opts);
        case TheoremId::d_cor_gf: return run_d_gf(true, n, bound, opts);
        case TheoremId::d_ellprime_dist: return run_d_ellprime_dist(n, opts);
        case TheoremId::d_ccode_stats: return run_d_code_stats(false, n, opts);
        case TheoremId::d_dcode_stats: return run_d_code_stats(true, n, opts);
        case TheoremId::d_length_bfs: return run_d_length_bfs(n, opts);
    }
    throw std::invalid_argument("unknown theorem id");
}

}  // namespace

std::string theorem_name(TheoremId id) {
    for (const auto& e : kNames) {
        if (e.id == id) return e.name;
    }
    throw std::invalid_argument("unknown theorem id");
}

TheoremId theorem_from_name(const std::string& name) {
    for (const auto& e : kNames) {
        if (name == e.name) return e.id;
    }
    throw std::invalid_argument("unknown theorem id: " + name);
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> v;
        for (const auto& e : kNames) v.push_back(e.id);
        return v;
    }();
    return ids;
}

std::string genset_name(GenSet g) {
    switch (g) {
        case GenSet::coxeter_g: return "coxeter-G";
        case GenSet::reflections_t: return "reflections-T";
        case GenSet::coxeter_d: return "coxeter-D";
    }
    throw std::invalid_argument("unknown generating set");
}

GenSet genset_from_name(const std::string& name) {
    std::string low = name;
    for (char& c : low) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low == "coxeter-g") return GenSet::coxeter_g;
    if (low == "reflections-t") return GenSet::reflections_t;
    if (low == "coxeter-d") return GenSet::coxeter_d;
    throw std::invalid_argument("unknown generating set: " + name);
}

std::map<ColoredPermutation, int> bfs_lengths(GenSet genset, int r, int n, long long bfs_cap) {
    if (r < 1 || n < 0) throw std::invalid_argument("bfs_lengths: need r >= 1, n >= 0");
    if (genset == GenSet::coxeter_d && r != 2)
        throw std::invalid_argument("bfs_lengths: coxeter-D requires r = 2");

    struct Move {
        int i, t, j;
    };
    std::vector<Move> moves;
    switch (genset) {
        case GenSet::coxeter_g:
            if (r >= 2 && n >= 1) moves.push_back({1, 1, 1});
            for (int i = 1; i < n; ++i) moves.push_back({i, 0, i + 1});
            break;
        case GenSet::reflections_t:
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    for (int t = 0; t < r; ++t) moves.push_back({i, t, j});
                }
                for (int t = 1; t < r; ++t) moves.push_back({i, t, i});
            }
            break;
        case GenSet::coxeter_d:
            if (n >= 2) moves.push_back({1, 1, 2});
            for (int i = 1; i < n; ++i) moves.push_back({i, 0, i + 1});
            break;
    }

    std::map<ColoredPermutation, int> dist;
    std::deque<ColoredPermutation> queue;
    ColoredPermutation start = identity(r, n);
    dist.emplace(start, 0);
    queue.push_back(std::move(start));
    while (!queue.empty()) {
        ColoredPermutation cur = std::move(queue.front());
        queue.pop_front();
        const int d = dist.at(cur);
        for (const Move& m : moves) {
            ColoredPermutation next = apply_transposition(cur, m.i, m.t, m.j);
            if (dist.emplace(next, d + 1).second) {
                if (static_cast<long long>(dist.size()) > bfs_cap) {
                    throw std::length_error("bfs_lengths: cap exceeded");
                }
                queue.push_back(std::move(next));
            }
        }
    }
    return dist;
}

long long sor_graph_oracle(const ColoredPermutation& pi, std::vector<int>* step_distances) {
    ColoredPermutation cur = pi;
    const int r = pi.r;
    const int n = pi.n();
    long long total = 0;
    for (int j = n; j >= 1; --j) {
        int p = 0;
        for (int k = 0; k < n; ++k) {
            if (cur.window[k].base == j) {
                p = k + 1;
                break;
            }
        }
        const int z = cur.window[p - 1].color;
        const int d = (r - z) % r;
        const int step = d == 0 ? j - p : p + j - 2 + d;
        total += step;
        if (step_distances) step_distances->push_back(step);
        cur = apply_transposition(cur, p, d, j);
    }
    return total;
}

std::string Report::to_json() const {
    nlohmann::ordered_json params;
    params["r"] = r;
    params["n"] = n;
    if (f) params["f"] = *f;
    if (all_ferrers) params["all_ferrers"] = true;
    nlohmann::ordered_json j;
    j["theorem"] = theorem_name(theorem);
    j["params"] = std::move(params);
    j["status"] = pass ? "pass" : "fail";
    j["checked"] = checked;
    j["elapsed_ms"] = elapsed_ms;
    if (counterexample) j["counterexample"] = *counterexample;
    return j.dump();
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << theorem_name(theorem) << " r=" << r << " n=" << n;
    if (f) {
        os << " f=";
        for (size_t k = 0; k < f->size(); ++k) {
            if (k > 0) os << ",";
            os << (*f)[k];
        }
    }
    if (all_ferrers) os << " all-ferrers";
    os << ": " << (pass ? "PASS" : "FAIL") << " checked=" << checked
       << " elapsed_ms=" << elapsed_ms;
    if (counterexample) os << " counterexample: " << *counterexample;
    return os.str();
}

Report check(TheoremId id, int r, int n, const std::optional<FerrersBound>& f, bool all_f,
             const CheckOptions& opts) {
    if (r < 1 || n < 0) throw std::invalid_argument("check: need r >= 1, n >= 0");
    if (claim_is_type_d(id) && r != 2)
        throw std::invalid_argument("check: type D claims require r = 2");
    if (!claim_takes_bound(id) && (f || all_f))
        throw std::invalid_argument("check: " + theorem_name(id) + " takes no Ferrers bound");
    if (f && all_f)
        throw std::invalid_argument("check: give either one bound or --all-ferrers, not both");
    if (f && static_cast<int>(f->f.size()) != n)
        throw std::invalid_argument("check: bound length must equal n");

    Report rep;
    rep.theorem = id;
    rep.r = r;
    rep.n = n;
    rep.all_ferrers = all_f;
    if (f) rep.f = f->f;

    const auto start = std::chrono::steady_clock::now();
    if (all_f) {
        rep.pass = true;
        for (const FerrersBound& bound : all_bounds(n, opts.enum_cap)) {
            const Outcome out = run_one_shape(id, r, n, bound, opts);
            rep.checked += out.checked;
            if (!out.pass) {
                rep.pass = false;
                rep.counterexample = "f=" + format_bound(bound) + ": " + out.cex.value();
                break;
            }
        }
    } else {
        const Outcome out = run_one_shape(id, r, n, f, opts);
        rep.pass = out.pass;
        rep.checked = out.checked;
        rep.counterexample = out.cex;
    }
    const auto stop = std::chrono::steady_clock::now();
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return rep;
}

std::vector<Report> check_default_grid(TheoremId id, const CheckOptions& opts) {
    std::vector<Report> reports;
    const bool takes_f = claim_takes_bound(id);
    if (claim_is_type_d(id)) {
        int n_max = 4;
        if (id == TheoremId::d_ellprime_dist) n_max = 5;
        for (int n = 1; n <= n_max; ++n) {
            reports.push_back(check(id, 2, n, std::nullopt, takes_f, opts));
        }
        return reports;
    }
    const int n_max =
        (id == TheoremId::length_bfs || id == TheoremId::reflength_bfs) ? 3 : 4;
    for (int r = 1; r <= 3; ++r) {
        for (int n = 0; n <= n_max; ++n) {
            reports.push_back(check(id, r, n, std::nullopt, takes_f, opts));
        }
    }
    return reports;
}

}  // namespace cperm
