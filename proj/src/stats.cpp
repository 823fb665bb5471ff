#include "cperm/stats.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cperm/codes.hpp"

namespace cperm {

bool letter_below(const ColoredLetter& a, const ColoredLetter& b) {
    const bool a_colored = a.color > 0;
    const bool b_colored = b.color > 0;
    if (a_colored != b_colored) return a_colored;
    if (!a_colored) return a.base < b.base;
    if (a.base != b.base) return a.base > b.base;
    return a.color > b.color;
}

long long inversions(const ColoredPermutation& pi) {
    const int n = pi.n();
    long long count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (letter_below(pi.window[static_cast<size_t>(j)], pi.window[static_cast<size_t>(i)]))
                ++count;
    return count;
}

long long length(const ColoredPermutation& pi) {
    long long total = inversions(pi);
    for (const ColoredLetter& l : pi.window)
        if (l.color > 0) total += l.base + l.color - 1;
    return total;
}

std::vector<int> refined_bases(const std::vector<ColoredLetter>& set, int t) {
    std::vector<int> out;
    for (const ColoredLetter& l : set)
        if (l.color == t) out.push_back(l.base);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> rtl_min_positions(const std::vector<ColoredLetter>& word) {
    std::vector<int> out;
    int min_so_far = std::numeric_limits<int>::max();
    for (int i = static_cast<int>(word.size()); i >= 1; --i) {
        const int b = word[static_cast<size_t>(i) - 1].base;
        if (b < min_so_far) {
            out.push_back(i);
            min_so_far = b;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<int> ltr_min_positions(const std::vector<ColoredLetter>& word) {
    std::vector<int> out;
    int min_so_far = std::numeric_limits<int>::max();
    for (int i = 1; i <= static_cast<int>(word.size()); ++i) {
        const int b = word[static_cast<size_t>(i) - 1].base;
        if (b < min_so_far) {
            out.push_back(i);
            min_so_far = b;
        }
    }
    return out;
}

std::vector<int> ltr_max_positions(const std::vector<ColoredLetter>& word) {
    std::vector<int> out;
    int max_so_far = std::numeric_limits<int>::min();
    for (int i = 1; i <= static_cast<int>(word.size()); ++i) {
        const int b = word[static_cast<size_t>(i) - 1].base;
        if (b > max_so_far) {
            out.push_back(i);
            max_so_far = b;
        }
    }
    return out;
}

std::vector<ColoredLetter> lmic_word(const ColoredPermutation& pi) {
    std::vector<ColoredLetter> word;
    if (pi.n() == 0) return word;
    ColoredLetter cur{1, 0};
    do {
        cur = apply(pi, cur);
        word.push_back(cur);
    } while (!(cur.base == 1 && cur.color == 0));
    return word;
}

namespace {

std::vector<ColoredLetter> sorted_by_base(std::vector<ColoredLetter> v) {
    std::sort(v.begin(), v.end(),
              [](const ColoredLetter& a, const ColoredLetter& b) { return a.base < b.base; });
    return v;
}

std::vector<ColoredLetter> letters_at(const std::vector<ColoredLetter>& word,
                                      const std::vector<int>& positions) {
    std::vector<ColoredLetter> out;
    out.reserve(positions.size());
    for (int p : positions) out.push_back(word[static_cast<size_t>(p) - 1]);
    return out;
}

std::vector<ColoredLetter> places_at(const std::vector<ColoredLetter>& word,
                                     const std::vector<int>& positions) {
    std::vector<ColoredLetter> out;
    out.reserve(positions.size());
    for (int p : positions) out.push_back({p, word[static_cast<size_t>(p) - 1].color});
    return out;
}

}  // namespace

StatBundle set_stats(const ColoredPermutation& pi) {
    StatBundle s;
    s.inv = inversions(pi);
    s.ell = length(pi);
    s.sor = sorting_index(pi);
    s.refl_len = refl_length(pi);

    const std::vector<ColoredLetter>& w = pi.window;
    const std::vector<int> rmins = rtl_min_positions(w);
    const std::vector<int> lmins = ltr_min_positions(w);
    const std::vector<int> lmaxs = ltr_max_positions(w);
    s.Rmil = sorted_by_base(letters_at(w, rmins));
    s.Rmip = sorted_by_base(places_at(w, rmins));
    s.Lmil = sorted_by_base(letters_at(w, lmins));
    s.Lmal = sorted_by_base(letters_at(w, lmaxs));
    s.Lmap = sorted_by_base(places_at(w, lmaxs));

    for (const ColoredCycle& cyc : cycle_decomposition(pi))
        s.Cyc.push_back({cyc.min_base, cyc.color_sum});

    const std::vector<ColoredLetter> word = lmic_word(pi);
    s.Lmic = sorted_by_base(letters_at(word, ltr_min_positions(word)));
    return s;
}

TwistedDStats twisted_d_stats(const ColoredPermutation& pi) {
    if (pi.r != 2) throw std::invalid_argument("twisted_d_stats requires r = 2");
    if (!is_even_signed(pi))
        throw std::invalid_argument("twisted_d_stats requires an even number of sign changes");
    const StatBundle s = set_stats(pi);

    auto twist = [&](const std::vector<ColoredLetter>& set, std::vector<int>& plus,
                     std::vector<int>& minus) {
        plus = refined_bases(set, 0);
        minus = refined_bases(set, 1);
        if (pi.n() > 0) {
            if (!std::binary_search(plus.begin(), plus.end(), 1))
                plus.insert(plus.begin(), 1);
            if (!minus.empty() && minus.front() == 1) minus.erase(minus.begin());
        }
    };

    TwistedDStats t;
    twist(s.Cyc, t.CycPlus, t.CycMinus);
    twist(s.Rmil, t.RmilPlus, t.RmilMinus);
    return t;
}

}  // namespace cperm
