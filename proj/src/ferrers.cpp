#include "cperm/ferrers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cperm {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

FerrersBound::FerrersBound(std::vector<int> bound) : f(std::move(bound)) {
    const int n = static_cast<int>(f.size());
    for (int i = 1; i <= n; ++i) {
        const int fi = f[static_cast<size_t>(i) - 1];
        if (fi < i) bad("bound entry " + std::to_string(i) + " below the staircase");
        if (fi > n) bad("bound entry " + std::to_string(i) + " exceeds n");
        if (i > 1 && fi < f[static_cast<size_t>(i) - 2]) bad("bound must be nondecreasing");
    }
}

FerrersBound parse_bound(const std::string& text) {
    std::vector<int> vals;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string item = text.substr(pos, next - pos);
        try {
            size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            vals.push_back(v);
        } catch (const std::exception&) {
            bad("bad bound entry: '" + item + "'");
        }
        pos = next + 1;
    }
    return FerrersBound(std::move(vals));
}

std::string format_bound(const FerrersBound& f) {
    std::string out;
    for (size_t i = 0; i < f.f.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(f.f[i]);
    }
    return out;
}

FerrersProfile profile(const FerrersBound& f) {
    const int n = f.n();
    FerrersProfile h;
    h.h.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int j = 1;
        while (f.f[static_cast<size_t>(j) - 1] < i) ++j;  // f_n = n guarantees termination
        h.h.push_back(j);
    }
    return h;
}

bool member(const ColoredPermutation& pi, const FerrersBound& f) {
    if (pi.n() != f.n()) bad("member: size mismatch");
    for (int i = 1; i <= pi.n(); ++i)
        if (pi.window[static_cast<size_t>(i) - 1].base > f.f[static_cast<size_t>(i) - 1])
            return false;
    return true;
}

FerrersBound min_sequence(const ColoredPermutation& pi) {
    const int n = pi.n();
    std::vector<int> f(static_cast<size_t>(n), 0);
    int running_max = 0;
    for (int i = 1; i <= n; ++i) {
        running_max = std::max(running_max, pi.window[static_cast<size_t>(i) - 1].base);
        f[static_cast<size_t>(i) - 1] = running_max;
    }
    return FerrersBound(std::move(f));
}

FerrersBound full_bound(int n) {
    if (n < 0) bad("full_bound: n must be >= 0");
    return FerrersBound(std::vector<int>(static_cast<size_t>(n), n));
}

bool dominates(const FerrersBound& f, const FerrersBound& g) {
    if (f.n() != g.n()) bad("dominates: size mismatch");
    for (size_t i = 0; i < f.f.size(); ++i)
        if (f.f[i] > g.f[i]) return false;
    return true;
}

std::vector<FerrersBound> all_bounds(int n, long long cap) {
    if (n < 0) bad("all_bounds: n must be >= 0");
    std::vector<FerrersBound> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    // Depth-first over entries: f_i ranges over [max(i, f_(i-1)), n].
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            FerrersBound b;
            b.f = cur;
            out.push_back(std::move(b));
            if (static_cast<long long>(out.size()) > cap)
                throw std::length_error("all_bounds cap exceeded");
            return;
        }
        const int lo = std::max(i, i > 1 ? cur[static_cast<size_t>(i) - 2] : 1);
        for (int v = lo; v <= n; ++v) {
            cur[static_cast<size_t>(i) - 1] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<ColoredPermutation> enumerate_restricted(int r, int n, const FerrersBound& f,
                                                     long long cap) {
    if (f.n() != n) bad("enumerate_restricted: size mismatch");
    return expand_choice_product(r, n, profile(f).h, ChoiceFamily::colored, cap);
}

std::vector<ColoredPermutation> enumerate_restricted_d(int n, const FerrersBound& f,
                                                       long long cap) {
    if (f.n() != n) bad("enumerate_restricted_d: size mismatch");
    return expand_choice_product(2, n, profile(f).h, ChoiceFamily::even_signed, cap);
}

}  // namespace cperm
