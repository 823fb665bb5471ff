#include "cperm/poly.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cperm/codes.hpp"
#include "cperm/stats.hpp"

namespace cperm {

namespace {

// Canonical form: sorted by variable, like variables merged, zero exponents
// dropped.  Negative exponents are rejected, this is a polynomial ring.
Monomial canonicalize(Monomial m) {
    std::sort(m.begin(), m.end());
    Monomial out;
    for (const auto& [v, e] : m) {
        if (e < 0) throw std::invalid_argument("negative exponent in monomial");
        if (e == 0) continue;
        if (!out.empty() && out.back().first == v) {
            out.back().second += e;
        } else {
            out.emplace_back(v, e);
        }
    }
    return out;
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

}  // namespace

std::string var_text(const VarId& v) {
    switch (v.kind) {
        case VarKind::q: return "q";
        case VarKind::x: return "x" + std::to_string(v.t) + "_" + std::to_string(v.i);
        case VarKind::y: return "y" + std::to_string(v.t) + "_" + std::to_string(v.i);
        case VarKind::x_agg: return "x" + std::to_string(v.t);
        case VarKind::y_agg: return "y" + std::to_string(v.t);
        case VarKind::u: return "u";
        case VarKind::t_idx: return "t" + std::to_string(v.i);
        case VarKind::s_idx: return "s" + std::to_string(v.i);
        case VarKind::t_agg: return "t";
        case VarKind::s_agg: return "s";
    }
    throw std::logic_error("unhandled variable kind");
}

std::string var_json_key(const VarId& v) {
    switch (v.kind) {
        case VarKind::q: return "q";
        case VarKind::x: return "x:" + std::to_string(v.t) + ":" + std::to_string(v.i);
        case VarKind::y: return "y:" + std::to_string(v.t) + ":" + std::to_string(v.i);
        case VarKind::x_agg: return "x:" + std::to_string(v.t);
        case VarKind::y_agg: return "y:" + std::to_string(v.t);
        case VarKind::u: return "u";
        case VarKind::t_idx: return "t:" + std::to_string(v.i);
        case VarKind::s_idx: return "s:" + std::to_string(v.i);
        case VarKind::t_agg: return "t";
        case VarKind::s_agg: return "s";
    }
    throw std::logic_error("unhandled variable kind");
}

std::string var_latex(const VarId& v) {
    switch (v.kind) {
        case VarKind::q: return "q";
        case VarKind::x:
            return "x_{" + std::to_string(v.t) + "," + std::to_string(v.i) + "}";
        case VarKind::y:
            return "y_{" + std::to_string(v.t) + "," + std::to_string(v.i) + "}";
        case VarKind::x_agg: return "x_{" + std::to_string(v.t) + "}";
        case VarKind::y_agg: return "y_{" + std::to_string(v.t) + "}";
        case VarKind::u: return "u";
        case VarKind::t_idx: return "t_{" + std::to_string(v.i) + "}";
        case VarKind::s_idx: return "s_{" + std::to_string(v.i) + "}";
        case VarKind::t_agg: return "t";
        case VarKind::s_agg: return "s";
    }
    throw std::logic_error("unhandled variable kind");
}

MVPoly::MVPoly(BigInt constant) {
    if (constant != 0) terms_[Monomial{}] = std::move(constant);
}

MVPoly MVPoly::var(const VarId& v, int exp) {
    MVPoly p;
    p.add_term(Monomial{{v, exp}}, 1);
    return p;
}

void MVPoly::add_term(Monomial m, BigInt coeff) {
    if (coeff == 0) return;
    Monomial key = canonicalize(std::move(m));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MVPoly& MVPoly::operator+=(const MVPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

MVPoly& MVPoly::operator-=(const MVPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

MVPoly operator*(const MVPoly& a, const MVPoly& b) {
    MVPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

MVPoly MVPoly::aggregate() const {
    MVPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial mapped;
        mapped.reserve(m.size());
        for (const auto& [v, e] : m) {
            VarId w = v;
            switch (v.kind) {
                case VarKind::x: w = {VarKind::x_agg, v.t, 0}; break;
                case VarKind::y: w = {VarKind::y_agg, v.t, 0}; break;
                case VarKind::t_idx: w = {VarKind::t_agg, 0, 0}; break;
                case VarKind::s_idx: w = {VarKind::s_agg, 0, 0}; break;
                default: break;
            }
            mapped.emplace_back(w, e);
        }
        out.add_term(std::move(mapped), c);
    }
    return out;
}

MVPoly MVPoly::collapse_to_q() const {
    MVPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial kept;
        for (const auto& [v, e] : m) {
            if (v.kind == VarKind::q) kept.emplace_back(v, e);
        }
        out.add_term(std::move(kept), c);
    }
    return out;
}

BigInt MVPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(canonicalize(m));
    return it == terms_.end() ? BigInt(0) : it->second;
}

long long MVPoly::degree_in_q() const {
    long long best = -1;
    for (const auto& [m, c] : terms_) {
        long long d = 0;
        for (const auto& [v, e] : m) {
            if (v.kind == VarKind::q) d = e;
        }
        best = std::max(best, d);
    }
    return best;
}

namespace {

// Display order: total degree first, then the canonical lexicographic order
// of the exponent vectors.
std::vector<const std::pair<const Monomial, BigInt>*> display_order(
    const std::map<Monomial, BigInt>& terms) {
    std::vector<const std::pair<const Monomial, BigInt>*> ptrs;
    ptrs.reserve(terms.size());
    for (const auto& term : terms) ptrs.push_back(&term);
    std::stable_sort(ptrs.begin(), ptrs.end(), [](const auto* a, const auto* b) {
        int da = total_degree(a->first), db = total_degree(b->first);
        if (da != db) return da < db;
        return a->first < b->first;
    });
    return ptrs;
}

std::string render_factor_text(const VarId& v, int e) {
    std::string s = var_text(v);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

std::string render_factor_latex(const VarId& v, int e) {
    std::string s = var_latex(v);
    if (e != 1) s += "^{" + std::to_string(e) + "}";
    return s;
}

}  // namespace

std::string MVPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto* term : display_order(terms_)) {
        const auto& [m, c] = *term;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::vector<std::string> factors;
        if (mag != 1 || m.empty()) factors.push_back(mag.str());
        for (const auto& [v, e] : m) factors.push_back(render_factor_text(v, e));
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k > 0) out += "*";
            out += factors[k];
        }
    }
    return out;
}

std::string MVPoly::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto* term : display_order(terms_)) {
        const auto& [m, c] = *term;
        nlohmann::ordered_json exps = nlohmann::ordered_json::object();
        for (const auto& [v, e] : m) exps[var_json_key(v)] = e;
        arr.push_back({{"coeff", c.str()}, {"exps", std::move(exps)}});
    }
    return arr.dump();
}

std::string MVPoly::to_latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto* term : display_order(terms_)) {
        const auto& [m, c] = *term;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool wrote = false;
        if (mag != 1 || m.empty()) {
            out += mag.str();
            wrote = true;
        }
        for (const auto& [v, e] : m) {
            if (wrote) out += " ";
            out += render_factor_latex(v, e);
            wrote = true;
        }
    }
    return out;
}

MVPoly q_power(int k) { return MVPoly::var(var_q(), k); }

MVPoly q_int(int i) {
    MVPoly p;
    for (int k = 0; k < i; ++k) p.add_term(Monomial{{var_q(), k}}, 1);
    return p;
}

MVPoly q_factorial(int n) {
    MVPoly p{BigInt(1)};
    for (int i = 1; i <= n; ++i) p = p * q_int(i);
    return p;
}

MVPoly gf_length_dist(int r, int n) {
    if (r < 1 || n < 0) throw std::invalid_argument("gf_length_dist: need r >= 1, n >= 0");
    MVPoly p = q_factorial(n);
    for (int i = 1; i <= n; ++i) {
        p = p * (MVPoly{BigInt(1)} + q_power(i) * q_int(r - 1));
    }
    return p;
}

MVPoly gf_cyc0_dist(int r, int n) {
    if (r < 1 || n < 0) throw std::invalid_argument("gf_cyc0_dist: need r >= 1, n >= 0");
    MVPoly p{BigInt(1)};
    for (int i = 1; i <= n; ++i) {
        p = p * (MVPoly::var(var_t_agg()) + MVPoly{BigInt(r * i - 1)});
    }
    return p;
}

MVPoly gf_ellprime_dist(int r, int n) {
    if (r < 1 || n < 0) throw std::invalid_argument("gf_ellprime_dist: need r >= 1, n >= 0");
    MVPoly p{BigInt(1)};
    for (int i = 1; i <= n; ++i) {
        MVPoly factor{BigInt(1)};
        factor.add_term(Monomial{{var_t_agg(), 1}}, r * i - 1);
        p = p * factor;
    }
    return p;
}

MVPoly gf_main_b(int r, int n, const FerrersBound& f) {
    if (r < 1) throw std::invalid_argument("gf_main_b: need r >= 1");
    if (static_cast<int>(f.f.size()) != n)
        throw std::invalid_argument("gf_main_b: bound length must equal n");
    const FerrersProfile prof = profile(f);
    const auto mod = [&](int t) { return ((t % r) + r) % r; };

    MVPoly p{BigInt(1)};
    for (int j = 1; j <= n; ++j) {
        MVPoly factor;
        if (j == 1) {
            for (int t = 0; t < r; ++t) {
                factor.add_term(
                    Monomial{{var_x(t, 1), 1}, {var_y(t, 1), 1}, {var_q(), mod(r - t)}}, 1);
            }
        } else {
            const int h = prof.h[j - 1];
            factor.add_term(Monomial{{var_x(0, j), 1}}, 1);
            for (int i = h; i <= j - 1; ++i) {
                Monomial m{{var_q(), j - i}};
                if (i == 1) m.emplace_back(var_y(0, j), 1);
                factor.add_term(std::move(m), 1);
            }
            for (int t = 1; t < r; ++t) {
                factor.add_term(Monomial{{var_x(mod(r - t), j), 1}, {var_q(), 2 * j + t - 2}}, 1);
                for (int i = h; i <= j - 1; ++i) {
                    Monomial m{{var_q(), j + i + t - 2}};
                    if (i == 1) m.emplace_back(var_y(mod(r - t), j), 1);
                    factor.add_term(std::move(m), 1);
                }
            }
        }
        p = p * factor;
    }
    return p;
}

MVPoly gf_cor_restricted(int r, int n, const FerrersBound& f) {
    return gf_main_b(r, n, f).aggregate();
}

MVPoly gf_d(int n, const FerrersBound& f) {
    if (static_cast<int>(f.f.size()) != n)
        throw std::invalid_argument("gf_d: bound length must equal n");
    if (n == 0) return MVPoly{BigInt(1)};
    const FerrersProfile prof = profile(f);

    MVPoly p = MVPoly::var(var_t(1)) * MVPoly::var(var_u());
    for (int j = 2; j <= n; ++j) {
        const int h = prof.h[j - 1];
        MVPoly factor = MVPoly::var(var_t(j));
        for (int i = h; i <= j - 1; ++i) {
            Monomial m1{{var_q(), j - i}};
            Monomial m2{{var_q(), j + i - 2}};
            if (i == 1) {
                m1.emplace_back(var_u(), 1);
                m2.emplace_back(var_u(), 1);
            }
            factor.add_term(std::move(m1), 1);
            factor.add_term(std::move(m2), 1);
        }
        factor.add_term(Monomial{{var_s(j), 1}, {var_q(), 2 * j - 2}}, 1);
        p = p * factor;
    }
    return p;
}

MVPoly gf_cor_d(int n, const FerrersBound& f) { return gf_d(n, f).aggregate(); }

MVPoly gf_cycplus_dist_d(int n) {
    if (n < 0) throw std::invalid_argument("gf_cycplus_dist_d: need n >= 0");
    if (n == 0) return MVPoly{BigInt(1)};
    MVPoly p = MVPoly::var(var_t_agg());
    for (int i = 2; i <= n; ++i) {
        p = p * (MVPoly::var(var_t_agg()) + MVPoly{BigInt(2 * i - 1)});
    }
    return p;
}

MVPoly gf_ellprime_dist_d(int n) {
    if (n < 0) throw std::invalid_argument("gf_ellprime_dist_d: need n >= 0");
    MVPoly p{BigInt(1)};
    for (int i = 2; i <= n; ++i) {
        MVPoly factor{BigInt(1)};
        factor.add_term(Monomial{{var_t_agg(), 1}}, 2 * i - 1);
        p = p * factor;
    }
    return p;
}

namespace {

Monomial weighting_monomial(const ColoredPermutation& pi, Weighting weighting) {
    const int r = pi.r;
    const auto mod = [&](int t) { return ((t % r) + r) % r; };
    Monomial m;
    switch (weighting) {
        case Weighting::length_rmil_lmil: {
            const StatBundle st = set_stats(pi);
            m.emplace_back(var_q(), st.ell);
            for (const auto& l : st.Rmil) m.emplace_back(var_x(mod(r - l.color), l.base), 1);
            for (const auto& l : st.Lmil) m.emplace_back(var_y(mod(r - l.color), l.base), 1);
            break;
        }
        case Weighting::sor_cyc_lmic: {
            const StatBundle st = set_stats(pi);
            m.emplace_back(var_q(), st.sor);
            for (const auto& l : st.Cyc) m.emplace_back(var_x(l.color, l.base), 1);
            for (const auto& l : st.Lmic) m.emplace_back(var_y(l.color, l.base), 1);
            break;
        }
        case Weighting::d_length_rmil: {
            const StatBundle st = set_stats(pi);
            const TwistedDStats tw = twisted_d_stats(pi);
            m.emplace_back(var_q(), length_d(pi));
            m.emplace_back(var_u(), static_cast<int>(st.Lmil.size()));
            for (int i : tw.RmilPlus) m.emplace_back(var_t(i), 1);
            for (int i : tw.RmilMinus) m.emplace_back(var_s(i), 1);
            break;
        }
        case Weighting::d_sor_cyc: {
            const StatBundle st = set_stats(pi);
            const TwistedDStats tw = twisted_d_stats(pi);
            m.emplace_back(var_q(), sor_d(pi));
            m.emplace_back(var_u(), static_cast<int>(st.Lmic.size()));
            for (int i : tw.CycPlus) m.emplace_back(var_t(i), 1);
            for (int i : tw.CycMinus) m.emplace_back(var_s(i), 1);
            break;
        }
    }
    return m;
}

MVPoly sum_chunk(const std::vector<ColoredPermutation>& family, std::size_t begin,
                 std::size_t end, Weighting weighting, bool aggregated) {
    MVPoly acc;
    for (std::size_t k = begin; k < end; ++k) {
        Monomial m = weighting_monomial(family[k], weighting);
        if (aggregated) {
            MVPoly one;
            one.add_term(std::move(m), 1);
            acc += one.aggregate();
        } else {
            acc.add_term(std::move(m), 1);
        }
    }
    return acc;
}

}  // namespace

MVPoly enumerative_gf(const std::vector<ColoredPermutation>& family, Weighting weighting,
                      bool aggregated, int jobs) {
    const std::size_t n = family.size();
    if (jobs <= 1 || n < 512) return sum_chunk(family, 0, n, weighting, aggregated);

    const std::size_t workers = std::min<std::size_t>(jobs, n);
    std::vector<MVPoly> partial(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = n * w / workers;
        const std::size_t end = n * (w + 1) / workers;
        threads.emplace_back([&, w, begin, end] {
            partial[w] = sum_chunk(family, begin, end, weighting, aggregated);
        });
    }
    for (auto& t : threads) t.join();
    MVPoly total;
    for (const auto& p : partial) total += p;
    return total;
}

MVPoly poly_from_histogram(const std::map<long long, long long>& histogram, const VarId& v) {
    MVPoly p;
    for (const auto& [value, count] : histogram) {
        if (value < 0) throw std::invalid_argument("histogram statistic must be nonnegative");
        p.add_term(Monomial{{v, static_cast<int>(value)}}, BigInt(count));
    }
    return p;
}

}  // namespace cperm
