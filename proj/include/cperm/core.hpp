#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

// Colored permutation groups G(r,n): the wreath product of a cyclic group of
// order r with the symmetric group S_n.  An element is stored in window form:
// a vector of n letters, each a base value (the underlying permutation) plus a
// color in [0, r).  The induced bijection on the full alphabet of r*n colored
// symbols is computed on demand and never materialized.

namespace cperm {

inline constexpr long long kDefaultEnumCap = 1'000'000;

struct ColoredLetter {
    int base = 1;
    int color = 0;

    friend auto operator<=>(const ColoredLetter&, const ColoredLetter&) = default;
};

struct ColoredPermutation {
    int r = 1;
    std::vector<ColoredLetter> window;

    int n() const { return static_cast<int>(window.size()); }

    friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;
};

struct GroupContext {
    int r = 1;
    int n = 0;
};

// One cycle of the base permutation with the colors of its letters attached.
// entries start at the smallest base and follow the permutation's action.
struct ColoredCycle {
    std::vector<ColoredLetter> entries;
    int min_base = 0;
    int color_sum = 0;  // sum of entry colors mod r
};

// Throws std::invalid_argument if the window data violates the G(r,n)
// invariants (bases not a permutation of 1..n, color out of range, r < 1).
void validate(const ColoredPermutation& pi);

ColoredPermutation identity(int r, int n);

// Window text grammar: entries separated by ',', whitespace ignored;
// entry := INT | INT '^' INT | '-' INT.  The '-b' shorthand means b^1 and is
// accepted only when r = 2.  An empty (or all-whitespace) text is the n = 0
// element.
ColoredPermutation parse_window(std::string_view text, int r);

// Canonical text: color 0 prints bare; for r = 2 color 1 prints as -b;
// otherwise b^t.  parse_window(format_window(pi), pi.r) == pi.
std::string format_window(const ColoredPermutation& pi);
std::string format_letter(const ColoredLetter& l, int r);

// The image of the colored symbol base^color under pi: pi(i^j) = s_i^(z_i+j).
ColoredLetter apply(const ColoredPermutation& pi, const ColoredLetter& l);

// Group product (s,z)*(p,w) = (sp, w + p(z)): b acts first, a second, as maps
// on the alphabet.  Right multiplication by a generator therefore edits
// window positions of the left factor.
ColoredPermutation multiply(const ColoredPermutation& a, const ColoredPermutation& b);

// (s,z)^-1 = (s^-1, -s^-1(z)).
ColoredPermutation inverse(const ColoredPermutation& pi);

// Right multiplication by the transposition (i^t j), 1 <= i <= j <= n: window
// position j receives the old letter at i with color raised by t, position i
// the old letter at j with color lowered by t.  For i = j the single letter's
// color is raised by t.  Off-diagonal transpositions are involutions; the
// inverse of a diagonal (i^t i) is (i^(r-t) i).
ColoredPermutation apply_transposition(const ColoredPermutation& pi, int i, int t, int j);

// Cycles of the base permutation, each letter carrying the color it has in
// the window; sorted by min_base.
std::vector<ColoredCycle> cycle_decomposition(const ColoredPermutation& pi);

// Rebuilds the window from a cycle decomposition (test aid for the round trip).
ColoredPermutation from_cycles(int r, int n, const std::vector<ColoredCycle>& cycles);

// Window read right to left, colors riding along with their letters.
ColoredPermutation reverse(const ColoredPermutation& pi);

// True when pi lies in the type D group D(n): r = 2 and an even number of
// color-1 letters.
bool is_even_signed(const ColoredPermutation& pi);

// The window as signed integers (r = 2 only): color 1 prints the base negated.
std::vector<int> signed_window(const ColoredPermutation& pi);
ColoredPermutation from_signed_window(const std::vector<int>& w);

// Families of per-letter transposition choices whose product expands to a
// whole (restricted) group: letter j enters as a fixed point and is either
// left alone, transposed with a position i in [h_j, j-1], or given one of the
// colored/signed choices.  h = all-ones gives the full group.
enum class ChoiceFamily {
    colored,      // 1 + sum (i j) + sum_t sum_i (i^t j): expands G(r,n,f)
    even_signed,  // 1 + sum (i j) + sum (i~ j), with (j~ j) = sign flips at 1 and j: expands D(n,f)
};

// Expands the choice product in depth-first order (identity choice first,
// then plain transpositions by ascending i, then colored/signed ones).
// Throws std::length_error when the element count would exceed cap.
std::vector<ColoredPermutation> expand_choice_product(int r, int n, const std::vector<int>& h,
                                                      ChoiceFamily family,
                                                      long long cap = kDefaultEnumCap);

// All r^n * n! elements of G(r,n), each exactly once, deterministic order.
std::vector<ColoredPermutation> enumerate_group(int r, int n, long long cap = kDefaultEnumCap);

// All 2^(n-1) * n! elements of D(n).
std::vector<ColoredPermutation> enumerate_group_d(int n, long long cap = kDefaultEnumCap);

}  // namespace cperm
