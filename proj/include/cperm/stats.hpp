#pragma once

#include <vector>

#include "cperm/core.hpp"

// Scalar and set-valued statistics of colored permutations: the length
// function, inversions under the group's linear order, the sorting index,
// reflection-type length, the cycle/minimum/maximum letter and place sets
// with their per-color refinements, and the twisted type D variants.

namespace cperm {

// Ascending linear order on colored letters:
//   n^(r-1) < ... < n^1 < ... < 1^(r-1) < ... < 1^1 < 1 < 2 < ... < n.
// Every colored letter sits below every uncolored one; among colored letters
// larger bases come first, and within one base larger colors come first.
bool letter_below(const ColoredLetter& a, const ColoredLetter& b);

// Number of window pairs i < j with pi_j below pi_i in the order above.
long long inversions(const ColoredPermutation& pi);

// l(pi) = inv(pi) + sum over colored letters of (base + color - 1); equals the
// Cayley graph distance over the generators s_0, ..., s_(n-1).
long long length(const ColoredPermutation& pi);

struct StatBundle {
    long long ell = 0;
    long long inv = 0;
    long long sor = 0;
    long long refl_len = 0;
    // Sorted by base.  Rmil/Lmil/Lmal hold letters, Rmip/Lmap hold positions
    // (as letters position^color), Cyc holds min_base^color_sum per cycle,
    // Lmic holds the strict left-to-right minima of the lmic word.
    std::vector<ColoredLetter> Cyc, Rmil, Rmip, Lmal, Lmap, Lmil, Lmic;
};

// Bases of the elements of a set-valued statistic that carry color t.
std::vector<int> refined_bases(const std::vector<ColoredLetter>& set, int t);

// The orbit of 1 under pi as a map on the colored alphabet:
// pi(1), pi^2(1), ..., stopping inclusively at the first 1^0.
std::vector<ColoredLetter> lmic_word(const ColoredPermutation& pi);

StatBundle set_stats(const ColoredPermutation& pi);

// Positions (1-based) of strict extrema in a word of colored letters,
// compared by base only.  Words may repeat bases (codes, lmic words).
std::vector<int> rtl_min_positions(const std::vector<ColoredLetter>& word);
std::vector<int> ltr_min_positions(const std::vector<ColoredLetter>& word);
std::vector<int> ltr_max_positions(const std::vector<ColoredLetter>& word);

// Type D twisted statistics (base-level sets): the letter 1 always joins the
// "+" side and leaves the "-" side.
struct TwistedDStats {
    std::vector<int> CycPlus, CycMinus;    // Cyc^0 u {1}, Cyc^1 \ {1}
    std::vector<int> RmilPlus, RmilMinus;  // Rmil^0 u {1}, Rmil^1 \ {1}
};

// Requires pi in D(n) (r = 2, even number of sign changes).
TwistedDStats twisted_d_stats(const ColoredPermutation& pi);

}  // namespace cperm
