#include "cperm/codes.hpp"

#include <algorithm>
#include <stdexcept>

#include "cperm/stats.hpp"

namespace cperm {

namespace {

int mod_color(int c, int r) {
    int m = c % r;
    return m < 0 ? m + r : m;
}

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

int position_of_base(const std::vector<ColoredLetter>& w, int base) {
    for (int p = 1; p <= static_cast<int>(w.size()); ++p)
        if (w[static_cast<size_t>(p) - 1].base == base) return p;
    bad("base not present in window: " + std::to_string(base));
}

void require_type_d(const ColoredPermutation& pi, const char* who) {
    if (pi.r != 2) bad(std::string(who) + " requires r = 2");
    if (!is_even_signed(pi)) bad(std::string(who) + " requires an even number of sign changes");
}

}  // namespace

void validate(const Code& code) {
    if (code.r < 1) bad("code: r must be >= 1");
    for (int i = 1; i <= code.n(); ++i) {
        const ColoredLetter& e = code.entries[static_cast<size_t>(i) - 1];
        if (e.base < 1 || e.base > i) bad("code entry " + std::to_string(i) + " out of range");
        if (e.color < 0 || e.color >= code.r)
            bad("code entry " + std::to_string(i) + " has color out of range");
    }
}

void validate(const SignedCode& code) {
    for (int i = 1; i <= code.n(); ++i) {
        const int c = code.entries[static_cast<size_t>(i) - 1];
        if (i == 1 && c != 1) bad("signed code must start with 1");
        if (c == 0 || c < -i || c > i)
            bad("signed code entry " + std::to_string(i) + " out of range");
    }
}

Code lehmer(const ColoredPermutation& pi) {
    const int n = pi.n();
    Code code;
    code.r = pi.r;
    code.entries.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const ColoredLetter& l = pi.window[static_cast<size_t>(i) - 1];
        int h = 0;
        for (int j = 1; j <= i; ++j)
            if (pi.window[static_cast<size_t>(j) - 1].base <= l.base) ++h;
        code.entries.push_back({h, mod_color(-l.color, pi.r)});
    }
    return code;
}

Code a_code(const ColoredPermutation& pi) { return lehmer(inverse(pi)); }

Code a_code_via_peel(const ColoredPermutation& pi) {
    const int n = pi.n();
    Code code;
    code.r = pi.r;
    code.entries.resize(static_cast<size_t>(n));
    std::vector<ColoredLetter> w = pi.window;
    for (int i = n; i >= 2; --i) {
        const int p = position_of_base(w, i);
        code.entries[static_cast<size_t>(i) - 1] = {p, w[static_cast<size_t>(p) - 1].color};
        w.erase(w.begin() + (p - 1));
    }
    if (n >= 1) code.entries[0] = {1, w[0].color};
    return code;
}

ColoredPermutation a_code_inv(const Code& a) {
    validate(a);
    ColoredPermutation pi;
    pi.r = a.r;
    for (int i = 1; i <= a.n(); ++i) {
        const ColoredLetter& e = a.entries[static_cast<size_t>(i) - 1];
        pi.window.insert(pi.window.begin() + (e.base - 1), {i, e.color});
    }
    return pi;
}

Code b_code(const ColoredPermutation& pi) {
    const int n = pi.n();
    Code code;
    code.r = pi.r;
    code.entries.resize(static_cast<size_t>(n));
    ColoredPermutation cur = pi;
    for (int i = n; i >= 2; --i) {
        const int p = position_of_base(cur.window, i);
        const int t = mod_color(-cur.window[static_cast<size_t>(p) - 1].color, pi.r);
        code.entries[static_cast<size_t>(i) - 1] = {p, t};
        cur = apply_transposition(cur, p, t, i);  // letter i lands at position i uncolored
        cur.window.pop_back();
    }
    if (n >= 1) code.entries[0] = {1, mod_color(-cur.window[0].color, pi.r)};
    return code;
}

Code b_code_via_orbits(const ColoredPermutation& pi) {
    const int n = pi.n();
    const ColoredPermutation inv = inverse(pi);
    Code code;
    code.r = pi.r;
    code.entries.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        ColoredLetter cur{i, 0};
        do {
            cur = apply(inv, cur);
        } while (cur.base > i);
        code.entries.push_back(cur);
    }
    return code;
}

ColoredPermutation b_code_inv(const Code& b) {
    validate(b);
    const int r = b.r;
    ColoredPermutation pi;
    pi.r = r;
    if (b.n() == 0) return pi;
    pi.window.push_back({1, mod_color(-b.entries[0].color, r)});
    for (int i = 2; i <= b.n(); ++i) {
        const ColoredLetter& e = b.entries[static_cast<size_t>(i) - 1];
        pi.window.push_back({i, 0});
        if (e.base < i)
            pi = apply_transposition(pi, e.base, e.color, i);
        else
            pi = apply_transposition(pi, i, mod_color(-e.color, r), i);
    }
    return pi;
}

long long code_weight(const Code& code) {
    long long total = 0;
    for (int i = 1; i <= code.n(); ++i) {
        const ColoredLetter& e = code.entries[static_cast<size_t>(i) - 1];
        total += i - e.base;
        if (e.color > 0) total += 2 * (e.base - 1) + e.color;
    }
    return total;
}

long long sorting_index(const ColoredPermutation& pi) { return code_weight(b_code(pi)); }

long long length_from_acode(const Code& a) {
    validate(a);
    return code_weight(a);
}

long long refl_length(const ColoredPermutation& pi) {
    const Code b = b_code(pi);
    long long fixed = 0;
    for (int i = 1; i <= b.n(); ++i) {
        const ColoredLetter& e = b.entries[static_cast<size_t>(i) - 1];
        if (e.base == i && e.color == 0) ++fixed;
    }
    return b.n() - fixed;
}

ColoredPermutation phi(const ColoredPermutation& pi) { return b_code_inv(a_code(pi)); }

CodeStats code_stats(const Code& code) {
    CodeStats s;
    for (int i = 1; i <= code.n(); ++i) {
        const ColoredLetter& e = code.entries[static_cast<size_t>(i) - 1];
        if (e.base == i) s.Max.push_back({i, e.color});
        if (e.base == 1) s.Min.push_back({i, e.color});
    }
    for (int p : rtl_min_positions(code.entries)) {
        const ColoredLetter& e = code.entries[static_cast<size_t>(p) - 1];
        s.Rmil.push_back(e);
        s.Rmip.push_back({p, e.color});
    }
    auto by_base = [](const ColoredLetter& a, const ColoredLetter& b) { return a.base < b.base; };
    std::sort(s.Max.begin(), s.Max.end(), by_base);
    std::sort(s.Min.begin(), s.Min.end(), by_base);
    std::sort(s.Rmil.begin(), s.Rmil.end(), by_base);
    std::sort(s.Rmip.begin(), s.Rmip.end(), by_base);
    return s;
}

Code signed_code_as_word(const SignedCode& code) {
    Code word;
    word.r = 2;
    word.entries.reserve(code.entries.size());
    for (int c : code.entries)
        word.entries.push_back(c < 0 ? ColoredLetter{-c, 1} : ColoredLetter{c, 0});
    return word;
}

SignedCode c_code(const ColoredPermutation& pi) {
    require_type_d(pi, "c_code");
    const int n = pi.n();
    SignedCode code;
    code.entries.resize(static_cast<size_t>(n));
    std::vector<int> w = signed_window(pi);
    for (int i = n; i >= 2; --i) {
        int p = 1;
        while (std::abs(w[static_cast<size_t>(p) - 1]) != i) ++p;
        const bool negative = w[static_cast<size_t>(p) - 1] < 0;
        code.entries[static_cast<size_t>(i) - 1] = negative ? -p : p;
        w.erase(w.begin() + (p - 1));
        if (negative) w[0] = -w[0];
    }
    if (n >= 1) code.entries[0] = 1;
    return code;
}

ColoredPermutation c_code_inv(const SignedCode& code) {
    validate(code);
    std::vector<int> w;
    if (code.n() >= 1) w.push_back(1);
    for (int i = 2; i <= code.n(); ++i) {
        const int c = code.entries[static_cast<size_t>(i) - 1];
        if (c > 0) {
            w.insert(w.begin() + (c - 1), i);
        } else {
            w[0] = -w[0];
            w.insert(w.begin() + (-c - 1), -i);
        }
    }
    ColoredPermutation pi = from_signed_window(w);
    if (code.n() >= 1 && !is_even_signed(pi)) bad("signed code does not decode to D(n)");
    return pi;
}

namespace {

// Right multiplication by t_D(p, i) (plain swap) or t_D(p~, i) (swap with both
// signs flipped; for p = i this flips the signs at positions 1 and i).
void apply_t_d(std::vector<int>& w, int p, int i, bool negative) {
    if (!negative) {
        if (p != i) std::swap(w[static_cast<size_t>(p) - 1], w[static_cast<size_t>(i) - 1]);
        return;
    }
    if (p == i) {
        w[0] = -w[0];
        w[static_cast<size_t>(i) - 1] = -w[static_cast<size_t>(i) - 1];
        return;
    }
    const int wp = w[static_cast<size_t>(p) - 1];
    w[static_cast<size_t>(p) - 1] = -w[static_cast<size_t>(i) - 1];
    w[static_cast<size_t>(i) - 1] = -wp;
}

}  // namespace

SignedCode d_code(const ColoredPermutation& pi) {
    require_type_d(pi, "d_code");
    const int n = pi.n();
    SignedCode code;
    code.entries.resize(static_cast<size_t>(n));
    std::vector<int> w = signed_window(pi);
    for (int i = n; i >= 2; --i) {
        int p = 1;
        while (std::abs(w[static_cast<size_t>(p) - 1]) != i) ++p;
        const bool negative = w[static_cast<size_t>(p) - 1] < 0;
        code.entries[static_cast<size_t>(i) - 1] = negative ? -p : p;
        apply_t_d(w, p, i, negative);
        w.pop_back();
    }
    if (n >= 1) code.entries[0] = 1;
    return code;
}

ColoredPermutation d_code_inv(const SignedCode& code) {
    validate(code);
    std::vector<int> w;
    if (code.n() >= 1) w.push_back(1);
    for (int i = 2; i <= code.n(); ++i) {
        const int c = code.entries[static_cast<size_t>(i) - 1];
        w.push_back(i);
        apply_t_d(w, std::abs(c), i, c < 0);
    }
    ColoredPermutation pi = from_signed_window(w);
    if (code.n() >= 1 && !is_even_signed(pi)) bad("signed code does not decode to D(n)");
    return pi;
}

ColoredPermutation psi(const ColoredPermutation& pi) { return d_code_inv(c_code(pi)); }

long long signed_code_weight(const SignedCode& code) {
    long long total = 0;
    for (int j = 1; j <= code.n(); ++j) {
        const int d = code.entries[static_cast<size_t>(j) - 1];
        if (d == j) continue;
        total += j - d - (d < 0 ? 2 : 0);
    }
    return total;
}

long long sor_d(const ColoredPermutation& pi) { return signed_code_weight(d_code(pi)); }

long long ell_tilde_d(const ColoredPermutation& pi) {
    const SignedCode d = d_code(pi);
    long long fixed = 0;
    for (int i = 1; i <= d.n(); ++i)
        if (d.entries[static_cast<size_t>(i) - 1] == i) ++fixed;
    return d.n() - fixed;
}

long long length_d(const ColoredPermutation& pi) {
    require_type_d(pi, "length_d");
    const std::vector<int> w = signed_window(pi);
    const int n = static_cast<int>(w.size());
    long long total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (w[static_cast<size_t>(i)] > w[static_cast<size_t>(j)]) ++total;
            if (w[static_cast<size_t>(i)] + w[static_cast<size_t>(j)] < 0) ++total;
        }
    return total;
}

}  // namespace cperm
