#pragma once

#include <vector>

#include "cperm/core.hpp"

// Code bijections on G(r,n) and D(n).  A code is a sequence whose i-th entry
// has base in [1, i] plus a color; the code space CS(r,n) has the same
// cardinality r^n * n! as the group.  The A-code is the Lehmer code of the
// inverse; the B-code records the pivots of the peel-off sorting by
// transpositions; phi = (B-code)^-1 o (A-code).  The type D analogs use
// signed entries and psi = (D-code)^-1 o (C-code).

namespace cperm {

struct Code {
    int r = 1;
    std::vector<ColoredLetter> entries;  // entry i: base in [1, i], color in [0, r)

    int n() const { return static_cast<int>(entries.size()); }

    friend auto operator<=>(const Code&, const Code&) = default;
};

// Throws std::invalid_argument when entries leave CS(r,n).
void validate(const Code& code);

// Signed code in SE(n,D): entry 1 is 1, entry i lies in [-i, i] \ {0}.
struct SignedCode {
    std::vector<int> entries;

    int n() const { return static_cast<int>(entries.size()); }

    friend auto operator<=>(const SignedCode&, const SignedCode&) = default;
};

void validate(const SignedCode& code);

// Lehmer code: entry i is h_i^((-z_i) mod r) with h_i = #{j <= i : s_j <= s_i}.
Code lehmer(const ColoredPermutation& pi);

// A-code(pi) = Lehmer(pi^-1).
Code a_code(const ColoredPermutation& pi);

// Peel-off route to the A-code: for i = n..2, record p^t where letter i (with
// color t) sits at position p, then delete it; must agree with a_code.
Code a_code_via_peel(const ColoredPermutation& pi);

// Rebuilds by inserting letter i^(e_i) at position c_i, i = 1..n.
ColoredPermutation a_code_inv(const Code& a);

// B-code via the peel-off sorting: for i = n..2 find letter i at position p
// with color z, set b_i = p^((r-z) mod r), multiply by (p^t i) and truncate;
// b_1 makes the final single letter uncolored.
Code b_code(const ColoredPermutation& pi);

// Orbit route: b_i = pi^(-k_i)(i) for the smallest k_i >= 1 whose base lands
// in [1, i]; must agree with b_code.
Code b_code_via_orbits(const ColoredPermutation& pi);

// Rebuilds by extending with fixed point i and multiplying by (c_i^(e_i) i)
// when c_i < i, and by (i^((r-e_i) mod r) i) when c_i = i (diagonal code
// entries are not involutions, hence the color reversal).
ColoredPermutation b_code_inv(const Code& b);

// sor(pi): evaluates sum of (i - c_i + [e_i > 0] * (2(c_i - 1) + e_i)) on the
// B-code; equals the comb-graph sorting distance.
long long code_weight(const Code& code);
long long sorting_index(const ColoredPermutation& pi);

// The same sum on an A-code gives the length of the decoded element.
long long length_from_acode(const Code& a);

// l'(pi) = n - #{i : b_i = i^0}: minimal factorization length over the
// extended transposition set.
long long refl_length(const ColoredPermutation& pi);

// phi = (B-code)^-1 o (A-code): bijection on G(r,n).
ColoredPermutation phi(const ColoredPermutation& pi);

// Statistics of a code: Max / Min collect positions i^(e_i) with c_i = i
// (resp. c_i = 1); Rmil / Rmip are the strict right-to-left minima of the
// code read as a word (letters c_i^(e_i), places i^(e_i)).  Sorted by base.
struct CodeStats {
    std::vector<ColoredLetter> Max, Min, Rmil, Rmip;
};

CodeStats code_stats(const Code& code);

// A signed code read as a 2-colored word: entry c -> |c| with color [c < 0].
Code signed_code_as_word(const SignedCode& code);

// C-code: peel i = n..2; letter i at position p gives c_i = p; letter -i at
// position p gives c_i = -p and flips the sign of the new first letter.
SignedCode c_code(const ColoredPermutation& pi);
ColoredPermutation c_code_inv(const SignedCode& code);

// D-code: peel with the type D transpositions; -i at position p records -p
// and applies the double sign flip variant.
SignedCode d_code(const ColoredPermutation& pi);
ColoredPermutation d_code_inv(const SignedCode& code);

// psi = (D-code)^-1 o (C-code): bijection on D(n).
ColoredPermutation psi(const ColoredPermutation& pi);

// sor_D(pi) = sum over D-code entries d_j != j of (j - d_j - 2 [d_j < 0]).
long long sor_d(const ColoredPermutation& pi);
long long signed_code_weight(const SignedCode& code);

// n - #{i : d_i = i}: the type D reflection-type length.
long long ell_tilde_d(const ColoredPermutation& pi);

// Coxeter length of D(n) over {(1~ 2), s_1, ..., s_(n-1)}: inversions of the
// signed window plus #{i < j : pi_i + pi_j < 0}.  Validated against the BFS
// oracle (see the verify module) before being trusted.
long long length_d(const ColoredPermutation& pi);

}  // namespace cperm
