#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cperm/core.hpp"
#include "cperm/ferrers.hpp"

// Exact sparse multivariate polynomials over arbitrary-precision integers,
// the closed-form generating-function products, and the enumerative
// generating functions built directly from the statistics.  One variable
// universe serves every identity: q; the per-letter markers x_{t,i}, y_{t,i}
// and their color aggregates x_t, y_t; the type D markers u, t_i, s_i and
// their aggregates t, s.

namespace cperm {

using BigInt = boost::multiprecision::cpp_int;

enum class VarKind : std::int8_t {
    q = 0,
    x,      // x_{t,i}
    y,      // y_{t,i}
    x_agg,  // x_t
    y_agg,  // y_t
    u,
    t_idx,  // t_i
    s_idx,  // s_i
    t_agg,  // t
    s_agg,  // s
};

struct VarId {
    VarKind kind = VarKind::q;
    int t = 0;  // color index (x, y, x_agg, y_agg)
    int i = 0;  // letter index (x, y, t_idx, s_idx)

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

std::string var_text(const VarId& v);   // e.g. q, x0_1, y2_1, x0, u, t1, s
std::string var_json_key(const VarId& v);  // e.g. q, x:0:1, x:0, u, t:1, s
std::string var_latex(const VarId& v);  // e.g. q, x_{0,1}, t_{1}

inline VarId var_q() { return {VarKind::q, 0, 0}; }
inline VarId var_x(int t, int i) { return {VarKind::x, t, i}; }
inline VarId var_y(int t, int i) { return {VarKind::y, t, i}; }
inline VarId var_u() { return {VarKind::u, 0, 0}; }
inline VarId var_t(int i) { return {VarKind::t_idx, 0, i}; }
inline VarId var_s(int i) { return {VarKind::s_idx, 0, i}; }
inline VarId var_t_agg() { return {VarKind::t_agg, 0, 0}; }

// A monomial: sorted (variable, exponent) pairs, exponents positive.
using Monomial = std::vector<std::pair<VarId, int>>;

class MVPoly {
  public:
    MVPoly() = default;
    explicit MVPoly(BigInt constant);
    static MVPoly var(const VarId& v, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, BigInt>& terms() const { return terms_; }

    void add_term(Monomial m, BigInt coeff);  // canonicalizes; drops zeros

    MVPoly& operator+=(const MVPoly& other);
    MVPoly& operator-=(const MVPoly& other);
    friend MVPoly operator+(MVPoly a, const MVPoly& b) { return a += b; }
    friend MVPoly operator-(MVPoly a, const MVPoly& b) { return a -= b; }
    friend MVPoly operator*(const MVPoly& a, const MVPoly& b);
    friend bool operator==(const MVPoly& a, const MVPoly& b) = default;

    // Substitutes x_{t,i} -> x_t, y_{t,i} -> y_t, t_i -> t, s_i -> s.
    MVPoly aggregate() const;

    // Sets every non-q variable to 1, leaving a polynomial in q alone.
    MVPoly collapse_to_q() const;

    BigInt coefficient(const Monomial& m) const;
    long long degree_in_q() const;  // -1 for the zero polynomial

    // Monomials sorted by total degree, then lexicographically; q prints
    // first inside a monomial, e.g. "x0_1*y0_1 + q*x2_1*y2_1 + q^2*x1_1*y1_1".
    std::string to_text() const;
    std::string to_json() const;
    std::string to_latex() const;

  private:
    std::map<Monomial, BigInt> terms_;
};

// [i]_q = 1 + q + ... + q^(i-1)   and   [n]_q! = prod of [i]_q.
MVPoly q_int(int i);
MVPoly q_factorial(int n);
MVPoly q_power(int k);

// Closed forms --------------------------------------------------------------

// [n]_q! * prod_(i=1..n) (1 + q^i [r-1]_q): the common distribution of the
// length and the sorting index over G(r,n).
MVPoly gf_length_dist(int r, int n);

// prod_(i=1..n) (t + ri - 1): distribution of the number of balanced cycles.
MVPoly gf_cyc0_dist(int r, int n);

// prod_(i=1..n) (1 + (ri - 1) t): distribution of the reflection-type length.
MVPoly gf_ellprime_dist(int r, int n);

// The restricted two-sided product: factor 1 is sum_t x_{t,1} y_{t,1}
// q^((r-t) mod r); factor j >= 2 is
//   x_{0,j} + sum_(i=h_j..j-1) w_i q^(j-i)
//          + sum_(t=1..r-1) [ x_{r-t,j} q^(2j+t-2)
//                             + sum_(i=h_j..j-1) w'_{i,t} q^(j+i+t-2) ],
// where w_i (resp. w'_{i,t}) is y_{0,j} (resp. y_{r-t,j}) when i = 1, else 1.
MVPoly gf_main_b(int r, int n, const FerrersBound& f);

// gf_main_b with the letter indices aggregated away (x_{t,i} -> x_t, ...).
MVPoly gf_cor_restricted(int r, int n, const FerrersBound& f);

// Type D product: t_1 u * prod_(j=2..n) ( t_j + sum_(i=h_j..j-1) w_i q^(j-i)
//   + sum_(i=h_j..j-1) w_i q^(j+i-2) + s_j q^(2j-2) ), w_i = u when i = 1.
MVPoly gf_d(int n, const FerrersBound& f);
MVPoly gf_cor_d(int n, const FerrersBound& f);

// t * prod_(i=2..n) (t + 2i - 1): distribution of cyc+ over D(n) (n >= 1).
MVPoly gf_cycplus_dist_d(int n);

// prod_(i=2..n) (1 + (2i - 1) t): distribution of the type D reflection length.
MVPoly gf_ellprime_dist_d(int n);

// Enumerative generating functions -------------------------------------------

enum class Weighting {
    length_rmil_lmil,  // q^l,     x_{t,i} over Rmil^(-t),  y_{t,i} over Lmil^(-t)
    sor_cyc_lmic,      // q^sor,   x_{t,i} over Cyc^t,      y_{t,i} over Lmic^t
    d_length_rmil,     // q^(l_D)  u^lmin,  t_i over Rmil+,  s_i over Rmil-
    d_sor_cyc,         // q^(sor_D) u^lmic, t_i over Cyc+,   s_i over Cyc-
};

// Exact sum of the weighting's monomial over the family.  jobs > 1 splits the
// family across threads; addition commutes so the result is schedule
// independent.
MVPoly enumerative_gf(const std::vector<ColoredPermutation>& family, Weighting weighting,
                      bool aggregated = false, int jobs = 1);

// Histogram of an integer statistic as a polynomial in the given variable.
MVPoly poly_from_histogram(const std::map<long long, long long>& histogram, const VarId& v);

}  // namespace cperm
