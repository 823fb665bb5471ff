#pragma once

#include <vector>

#include "cperm/core.hpp"

// Ferrers bounds: nondecreasing caps f_1 <= ... <= f_n <= n with f_i >= i,
// cutting out the restricted sets G(r,n,f) = {pi : base(pi_i) <= f_i} and
// D(n,f).  The profile H(f) gives the leftmost legal position of each letter
// and drives the factorized enumeration.

namespace cperm {

struct FerrersBound {
    std::vector<int> f;

    FerrersBound() = default;
    // Throws std::invalid_argument unless f is nondecreasing with i <= f_i <= n.
    explicit FerrersBound(std::vector<int> bound);

    int n() const { return static_cast<int>(f.size()); }

    friend auto operator<=>(const FerrersBound&, const FerrersBound&) = default;
};

FerrersBound parse_bound(const std::string& text);
std::string format_bound(const FerrersBound& f);

struct FerrersProfile {
    std::vector<int> h;  // h_i = smallest position where letter i may appear
};

FerrersProfile profile(const FerrersBound& f);

// True iff every base value obeys its cap (colors are unrestricted; for type D
// the bases already are the absolute values).
bool member(const ColoredPermutation& pi, const FerrersBound& f);

// The minimal bound admitting pi: constant runs between the left-to-right
// maxima of the base permutation.
FerrersBound min_sequence(const ColoredPermutation& pi);

// f dominated by g: f_i <= g_i pointwise.
bool dominates(const FerrersBound& f, const FerrersBound& g);

// The unrestricted bound (n, ..., n).
FerrersBound full_bound(int n);

// Every valid bound for size n, lexicographically; there are Catalan(n) many.
std::vector<FerrersBound> all_bounds(int n, long long cap = kDefaultEnumCap);

// The whole of G(r,n,f) (resp. D(n,f)), each element once, by expanding the
// per-letter choice factors; scales with the restricted count, not r^n n!.
std::vector<ColoredPermutation> enumerate_restricted(int r, int n, const FerrersBound& f,
                                                     long long cap = kDefaultEnumCap);
std::vector<ColoredPermutation> enumerate_restricted_d(int n, const FerrersBound& f,
                                                       long long cap = kDefaultEnumCap);

}  // namespace cperm
