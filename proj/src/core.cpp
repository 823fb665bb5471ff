#include "cperm/core.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <stdexcept>

namespace cperm {

namespace {

int mod_color(int c, int r) {
    int m = c % r;
    return m < 0 ? m + r : m;
}

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

void validate(const ColoredPermutation& pi) {
    if (pi.r < 1) bad("r must be >= 1");
    const int n = pi.n();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (const ColoredLetter& l : pi.window) {
        if (l.base < 1 || l.base > n) bad("base out of range: " + std::to_string(l.base));
        if (seen[static_cast<size_t>(l.base)]) bad("duplicate base: " + std::to_string(l.base));
        seen[static_cast<size_t>(l.base)] = 1;
        if (l.color < 0 || l.color >= pi.r) bad("color out of range: " + std::to_string(l.color));
    }
}

ColoredPermutation identity(int r, int n) {
    if (r < 1) bad("r must be >= 1");
    if (n < 0) bad("n must be >= 0");
    ColoredPermutation pi;
    pi.r = r;
    pi.window.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) pi.window.push_back({i, 0});
    return pi;
}

ColoredPermutation parse_window(std::string_view text, int r) {
    if (r < 1) bad("r must be >= 1");
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);

    ColoredPermutation pi;
    pi.r = r;
    if (compact.empty()) return pi;  // the n = 0 element

    size_t pos = 0;
    auto read_int = [&](const char* what) {
        size_t start = pos;
        while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) ++pos;
        if (pos == start) bad(std::string("expected ") + what + " in window entry");
        return std::stoi(compact.substr(start, pos - start));
    };

    while (true) {
        bool negative = false;
        if (pos < compact.size() && compact[pos] == '-') {
            if (r != 2) bad("signed shorthand -b requires r = 2");
            negative = true;
            ++pos;
        }
        int base = read_int("base");
        int color = 0;
        if (negative) {
            color = 1;
        } else if (pos < compact.size() && compact[pos] == '^') {
            ++pos;
            color = read_int("color");
        }
        pi.window.push_back({base, color});
        if (pos == compact.size()) break;
        if (compact[pos] != ',') bad("unexpected character in window text");
        ++pos;
        if (pos == compact.size()) bad("empty window entry");
    }
    validate(pi);
    return pi;
}

std::string format_letter(const ColoredLetter& l, int r) {
    if (l.color == 0) return std::to_string(l.base);
    if (r == 2 && l.color == 1) return "-" + std::to_string(l.base);
    return std::to_string(l.base) + "^" + std::to_string(l.color);
}

std::string format_window(const ColoredPermutation& pi) {
    std::string out;
    for (size_t i = 0; i < pi.window.size(); ++i) {
        if (i) out.push_back(',');
        out += format_letter(pi.window[i], pi.r);
    }
    return out;
}

ColoredLetter apply(const ColoredPermutation& pi, const ColoredLetter& l) {
    const ColoredLetter& w = pi.window[static_cast<size_t>(l.base) - 1];
    return {w.base, mod_color(w.color + l.color, pi.r)};
}

ColoredPermutation multiply(const ColoredPermutation& a, const ColoredPermutation& b) {
    if (a.r != b.r) bad("multiply: mismatched r");
    if (a.n() != b.n()) bad("multiply: mismatched n");
    ColoredPermutation out;
    out.r = a.r;
    out.window.reserve(b.window.size());
    for (const ColoredLetter& l : b.window) out.window.push_back(apply(a, l));
    return out;
}

ColoredPermutation inverse(const ColoredPermutation& pi) {
    const int n = pi.n();
    ColoredPermutation out;
    out.r = pi.r;
    out.window.resize(static_cast<size_t>(n));
    for (int p = 1; p <= n; ++p) {
        const ColoredLetter& l = pi.window[static_cast<size_t>(p) - 1];
        out.window[static_cast<size_t>(l.base) - 1] = {p, mod_color(-l.color, pi.r)};
    }
    return out;
}

ColoredPermutation apply_transposition(const ColoredPermutation& pi, int i, int t, int j) {
    const int n = pi.n();
    if (i < 1 || j < i || j > n) bad("apply_transposition: positions out of range");
    if (t < 0 || t >= pi.r) bad("apply_transposition: color out of range");
    ColoredPermutation out = pi;
    if (i == j) {
        ColoredLetter& l = out.window[static_cast<size_t>(i) - 1];
        l.color = mod_color(l.color + t, pi.r);
        return out;
    }
    const ColoredLetter wi = pi.window[static_cast<size_t>(i) - 1];
    const ColoredLetter wj = pi.window[static_cast<size_t>(j) - 1];
    out.window[static_cast<size_t>(j) - 1] = {wi.base, mod_color(wi.color + t, pi.r)};
    out.window[static_cast<size_t>(i) - 1] = {wj.base, mod_color(wj.color - t, pi.r)};
    return out;
}

std::vector<ColoredCycle> cycle_decomposition(const ColoredPermutation& pi) {
    const int n = pi.n();
    // color_of[m] = color of letter m where it sits in the window
    std::vector<int> color_of(static_cast<size_t>(n) + 1, 0);
    for (const ColoredLetter& l : pi.window) color_of[static_cast<size_t>(l.base)] = l.color;

    std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
    std::vector<ColoredCycle> cycles;
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<size_t>(start)]) continue;
        ColoredCycle cyc;
        cyc.min_base = start;
        int sum = 0;
        int m = start;
        do {
            visited[static_cast<size_t>(m)] = 1;
            cyc.entries.push_back({m, color_of[static_cast<size_t>(m)]});
            sum += color_of[static_cast<size_t>(m)];
            m = pi.window[static_cast<size_t>(m) - 1].base;  // m -> sigma(m)
        } while (m != start);
        cyc.color_sum = mod_color(sum, pi.r);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

ColoredPermutation from_cycles(int r, int n, const std::vector<ColoredCycle>& cycles) {
    ColoredPermutation pi = identity(r, n);
    for (const ColoredCycle& cyc : cycles) {
        const size_t k = cyc.entries.size();
        for (size_t idx = 0; idx < k; ++idx) {
            const ColoredLetter& cur = cyc.entries[idx];
            const ColoredLetter& next = cyc.entries[(idx + 1) % k];
            // sigma(cur) = next, and "next" keeps the color it carries in the window
            pi.window[static_cast<size_t>(cur.base) - 1] = next;
        }
    }
    validate(pi);
    return pi;
}

ColoredPermutation reverse(const ColoredPermutation& pi) {
    ColoredPermutation out = pi;
    std::reverse(out.window.begin(), out.window.end());
    return out;
}

bool is_even_signed(const ColoredPermutation& pi) {
    if (pi.r != 2) return false;
    int neg = 0;
    for (const ColoredLetter& l : pi.window) neg += l.color;
    return neg % 2 == 0;
}

std::vector<int> signed_window(const ColoredPermutation& pi) {
    if (pi.r != 2) bad("signed_window requires r = 2");
    std::vector<int> w;
    w.reserve(pi.window.size());
    for (const ColoredLetter& l : pi.window) w.push_back(l.color ? -l.base : l.base);
    return w;
}

ColoredPermutation from_signed_window(const std::vector<int>& w) {
    ColoredPermutation pi;
    pi.r = 2;
    pi.window.reserve(w.size());
    for (int v : w) {
        if (v == 0) bad("signed window entries must be nonzero");
        pi.window.push_back(v < 0 ? ColoredLetter{-v, 1} : ColoredLetter{v, 0});
    }
    validate(pi);
    return pi;
}

namespace {

long long expected_choice_count(int r, int n, const std::vector<int>& h, ChoiceFamily family) {
    long long total = 1;
    for (int j = 1; j <= n; ++j) {
        const int hj = h[static_cast<size_t>(j) - 1];
        long long choices;
        if (family == ChoiceFamily::colored) {
            choices = 1 + (j - hj) + static_cast<long long>(r - 1) * (j - hj + 1);
        } else {
            choices = j == 1 ? 1 : 2LL * (j - hj + 1);
        }
        if (total > (1LL << 62) / (choices > 0 ? choices : 1)) return -1;  // overflow guard
        total *= choices;
    }
    return total;
}

// Flips the signs (color 1 toggles) at window positions 1 and j: right
// multiplication by (1~ 1)(j~ j), the diagonal member of the type D family.
ColoredPermutation flip_first_and(const ColoredPermutation& pi, int j) {
    ColoredPermutation out = apply_transposition(pi, 1, 1, 1);
    return apply_transposition(out, j, 1, j);
}

}  // namespace

std::vector<ColoredPermutation> expand_choice_product(int r, int n, const std::vector<int>& h,
                                                      ChoiceFamily family, long long cap) {
    if (r < 1 || n < 0) bad("expand_choice_product: invalid r or n");
    if (static_cast<int>(h.size()) != n) bad("expand_choice_product: profile size mismatch");
    if (family == ChoiceFamily::even_signed && r != 2) bad("even_signed expansion requires r = 2");
    for (int j = 1; j <= n; ++j) {
        const int hj = h[static_cast<size_t>(j) - 1];
        if (hj < 1 || hj > j) bad("expand_choice_product: profile entry out of range");
    }
    const long long expected = expected_choice_count(r, n, h, family);
    if (expected < 0 || expected > cap)
        throw std::length_error("enumeration cap exceeded (count " +
                                (expected < 0 ? std::string("> 2^62") : std::to_string(expected)) +
                                ", cap " + std::to_string(cap) + ")");

    std::vector<ColoredPermutation> out;
    out.reserve(static_cast<size_t>(expected));

    // Depth-first over factors: extend the partial window with fixed point j,
    // then branch over the factor's choices in the documented order.
    std::function<void(ColoredPermutation&, int)> rec = [&](ColoredPermutation& partial, int j) {
        if (j > n) {
            out.push_back(partial);
            return;
        }
        partial.window.push_back({j, 0});
        const int hj = h[static_cast<size_t>(j) - 1];
        {
            ColoredPermutation next = partial;  // identity choice
            rec(next, j + 1);
        }
        if (family == ChoiceFamily::colored) {
            for (int i = hj; i <= j - 1; ++i) {
                ColoredPermutation next = apply_transposition(partial, i, 0, j);
                rec(next, j + 1);
            }
            for (int t = 1; t <= r - 1; ++t)
                for (int i = hj; i <= j; ++i) {
                    ColoredPermutation next = apply_transposition(partial, i, t, j);
                    rec(next, j + 1);
                }
        } else if (j >= 2) {
            for (int i = hj; i <= j - 1; ++i) {
                ColoredPermutation next = apply_transposition(partial, i, 0, j);
                rec(next, j + 1);
            }
            for (int i = hj; i <= j - 1; ++i) {
                ColoredPermutation next = apply_transposition(partial, i, 1, j);
                rec(next, j + 1);
            }
            {
                ColoredPermutation next = flip_first_and(partial, j);
                rec(next, j + 1);
            }
        }
        partial.window.pop_back();
    };

    ColoredPermutation seed;
    seed.r = r;
    rec(seed, 1);
    assert(static_cast<long long>(out.size()) == expected);
    return out;
}

std::vector<ColoredPermutation> enumerate_group(int r, int n, long long cap) {
    return expand_choice_product(r, n, std::vector<int>(static_cast<size_t>(n), 1),
                                 ChoiceFamily::colored, cap);
}

std::vector<ColoredPermutation> enumerate_group_d(int n, long long cap) {
    return expand_choice_product(2, n, std::vector<int>(static_cast<size_t>(n), 1),
                                 ChoiceFamily::even_signed, cap);
}

}  // namespace cperm
