#include <doctest.h>

#include <map>
#include <stdexcept>

#include "cperm/core.hpp"
#include "cperm/ferrers.hpp"
#include "cperm/poly.hpp"
#include "cperm/stats.hpp"

using namespace cperm;

TEST_CASE("polynomial arithmetic") {
    auto q = MVPoly::var(var_q());
    auto one = MVPoly(BigInt(1));

    auto square = (one + q) * (one + q);
    auto expect = one + MVPoly(BigInt(2)) * q + MVPoly::var(var_q(), 2);
    CHECK(square == expect);
    CHECK((square - expect).is_zero());

    CHECK(q_int(1) == one);
    CHECK(q_int(4).to_text() == "1 + q + q^2 + q^3");
    CHECK(q_factorial(3).to_text() == "1 + 2*q + 2*q^2 + q^3");
    CHECK(q_power(0) == one);

    auto zero = MVPoly();
    CHECK(zero.is_zero());
    CHECK(zero.degree_in_q() == -1);
    CHECK((zero * q).is_zero());
    CHECK(q_int(4).degree_in_q() == 3);
}

TEST_CASE("term canonicalization") {
    MVPoly p;
    p.add_term({{var_x(0, 2), 1}, {var_q(), 2}}, BigInt(1));
    p.add_term({{var_q(), 2}, {var_x(0, 2), 1}}, BigInt(2));  // same monomial, unsorted
    CHECK(p.to_text() == "3*q^2*x0_2");
    p.add_term({{var_q(), 2}, {var_x(0, 2), 1}}, BigInt(-3));
    CHECK(p.is_zero());

    MVPoly bad;
    CHECK_THROWS_AS(bad.add_term({{var_q(), -1}}, BigInt(1)), std::invalid_argument);
}

TEST_CASE("variable names") {
    CHECK(var_text(var_q()) == "q");
    CHECK(var_text(var_x(2, 1)) == "x2_1");
    CHECK(var_text(var_y(0, 3)) == "y0_3");
    CHECK(var_text(var_u()) == "u");
    CHECK(var_text(var_t(2)) == "t2");
    CHECK(var_text(var_s(2)) == "s2");
    CHECK(var_text(var_t_agg()) == "t");
    CHECK(var_json_key(var_x(2, 1)) == "x:2:1");
    CHECK(var_latex(var_x(2, 1)) == "x_{2,1}");
    CHECK(var_latex(var_t(2)) == "t_{2}");
}

TEST_CASE("rendering") {
    auto p = gf_main_b(3, 1, parse_bound("1"));
    CHECK(p.to_text() == "x0_1*y0_1 + q*x2_1*y2_1 + q^2*x1_1*y1_1");
    CHECK(p.to_latex() == "x_{0,1} y_{0,1} + q x_{2,1} y_{2,1} + q^{2} x_{1,1} y_{1,1}");

    auto small = MVPoly(BigInt(1)) + MVPoly::var(var_q());
    CHECK(small.to_json() == R"([{"coeff":"1","exps":{}},{"coeff":"1","exps":{"q":1}}])");
    CHECK(MVPoly().to_text() == "0");

    auto neg = MVPoly(BigInt(-2)) + MVPoly::var(var_q());
    CHECK(neg.to_text() == "-2 + q");
}

TEST_CASE("closed form distributions match brute force on G(3,2)") {
    auto dist = gf_length_dist(3, 2);
    CHECK(dist.to_text() == "1 + 2*q + 3*q^2 + 4*q^3 + 4*q^4 + 3*q^5 + q^6");

    std::map<long long, long long> ell_hist, sor_hist, cyc0_hist, refl_hist;
    for (const auto& pi : enumerate_group(3, 2)) {
        auto st = set_stats(pi);
        ++ell_hist[st.ell];
        ++sor_hist[st.sor];
        ++cyc0_hist[static_cast<long long>(refined_bases(st.Cyc, 0).size())];
        ++refl_hist[st.refl_len];
    }
    CHECK(poly_from_histogram(ell_hist, var_q()) == dist);
    CHECK(poly_from_histogram(sor_hist, var_q()) == dist);

    // (t+2)(t+5) counts elements by balanced cycles, highest power all balanced
    CHECK(poly_from_histogram(cyc0_hist, var_t_agg()) == gf_cyc0_dist(3, 2));
    CHECK(gf_cyc0_dist(3, 2).to_text() == "10 + 7*t + t^2");

    // refl_len = n - cyc0 mirrors the same product
    CHECK(poly_from_histogram(refl_hist, var_t_agg()) == gf_ellprime_dist(3, 2));
    CHECK(gf_ellprime_dist(3, 2).to_text() == "1 + 7*t + 10*t^2");
}

TEST_CASE("restricted product for G(3,2) with bound 1,2") {
    auto f = parse_bound("1,2");
    auto p = gf_main_b(3, 2, f);

    // hand-built: (x01 y01 + x21 y21 q + x11 y11 q^2)(x02 + x22 q^3 + x12 q^4)
    auto term = [](int t, int qexp) {
        auto m = MVPoly::var(var_x(t, 1)) * MVPoly::var(var_y(t, 1));
        return m * q_power(qexp);
    };
    auto factor1 = term(0, 0) + term(2, 1) + term(1, 2);
    auto factor2 = MVPoly::var(var_x(0, 2)) + MVPoly::var(var_x(2, 2)) * q_power(3) +
                   MVPoly::var(var_x(1, 2)) * q_power(4);
    CHECK(p == factor1 * factor2);

    CHECK(p.coefficient({{var_q(), 4}, {var_x(0, 1), 1}, {var_x(1, 2), 1}, {var_y(0, 1), 1}}) == 1);
    CHECK(p.coefficient({{var_q(), 4}, {var_x(2, 1), 1}, {var_x(2, 2), 1}, {var_y(2, 1), 1}}) == 1);
    CHECK(p.coefficient({{var_q(), 4}}) == 0);

    CHECK(gf_cor_restricted(3, 2, f) == p.aggregate());
    VarId x0{VarKind::x_agg, 0, 0}, x1{VarKind::x_agg, 1, 0}, y0{VarKind::y_agg, 0, 0};
    CHECK(p.aggregate().coefficient({{var_q(), 4}, {x0, 1}, {x1, 1}, {y0, 1}}) == 1);
}

TEST_CASE("full bound product collapses to the length distribution") {
    for (int r : {1, 2, 3})
        for (int n : {0, 1, 2, 3}) {
            auto p = gf_main_b(r, n, full_bound(n));
            CHECK(p.collapse_to_q() == gf_length_dist(r, n));
        }
}

TEST_CASE("type D products") {
    auto p22 = gf_d(2, parse_bound("2,2"));
    auto u = MVPoly::var(var_u());
    auto hand = MVPoly::var(var_t(1)) * u *
                (MVPoly::var(var_t(2)) + MVPoly(BigInt(2)) * u * q_power(1) +
                 MVPoly::var(var_s(2)) * q_power(2));
    CHECK(p22 == hand);
    CHECK(p22.to_text() == "u*t1*t2 + 2*q*u^2*t1 + q^2*u*t1*s2");

    auto p12 = gf_d(2, parse_bound("1,2"));
    CHECK(p12 == MVPoly::var(var_t(1)) * u *
                     (MVPoly::var(var_t(2)) + MVPoly::var(var_s(2)) * q_power(2)));

    CHECK(gf_cor_d(2, parse_bound("2,2")) == p22.aggregate());
    CHECK(gf_cycplus_dist_d(2).to_text() == "3*t + t^2");
    CHECK(gf_ellprime_dist_d(2).to_text() == "1 + 3*t");
    CHECK(gf_cycplus_dist_d(1).to_text() == "t");
}

TEST_CASE("enumerative generating functions") {
    auto family = enumerate_restricted(3, 2, parse_bound("1,2"));
    auto lhs = enumerative_gf(family, Weighting::length_rmil_lmil);
    auto rhs = enumerative_gf(family, Weighting::sor_cyc_lmic);
    auto closed = gf_main_b(3, 2, parse_bound("1,2"));
    CHECK(lhs == closed);
    CHECK(rhs == closed);

    auto agg = enumerative_gf(family, Weighting::length_rmil_lmil, true);
    CHECK(agg == closed.aggregate());

    auto dfam = enumerate_group_d(2);
    CHECK(enumerative_gf(dfam, Weighting::d_length_rmil) == gf_d(2, full_bound(2)));
    CHECK(enumerative_gf(dfam, Weighting::d_sor_cyc) == gf_d(2, full_bound(2)));
}

TEST_CASE("threaded summation is schedule independent") {
    auto family = enumerate_group(3, 4);  // 1944 elements, above the serial cutoff
    auto serial = enumerative_gf(family, Weighting::sor_cyc_lmic, false, 1);
    auto parallel = enumerative_gf(family, Weighting::sor_cyc_lmic, false, 4);
    CHECK(serial == parallel);
}
