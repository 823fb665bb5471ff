#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cperm/core.hpp"
#include "cperm/ferrers.hpp"

using namespace cperm;

TEST_CASE("bound text and validation") {
    auto f = parse_bound("2,3,3,4");
    CHECK(f.f == std::vector<int>{2, 3, 3, 4});
    CHECK(format_bound(f) == "2,3,3,4");
    CHECK(parse_bound("") == FerrersBound{});

    CHECK_THROWS_AS(FerrersBound({2, 1}), std::invalid_argument);     // decreasing
    CHECK_THROWS_AS(FerrersBound({1, 1}), std::invalid_argument);     // f_2 < 2
    CHECK_THROWS_AS(FerrersBound({1, 2, 4}), std::invalid_argument);  // f_3 > n
    CHECK_NOTHROW(FerrersBound({1, 3, 3}));
}

TEST_CASE("profile gives leftmost legal positions") {
    CHECK(profile(parse_bound("2,3,3,4")).h == std::vector<int>{1, 1, 2, 4});
    CHECK(profile(parse_bound("1,2")).h == std::vector<int>{1, 2});
    CHECK(profile(full_bound(4)).h == std::vector<int>{1, 1, 1, 1});
    CHECK(full_bound(3).f == std::vector<int>{3, 3, 3});
}

TEST_CASE("min_sequence and membership") {
    auto pi = parse_window("3,6,1,4,7,5,9,2,8", 1);
    CHECK(min_sequence(pi).f == std::vector<int>{3, 6, 6, 6, 7, 7, 9, 9, 9});

    auto f = parse_bound("2,3,3,4");
    for (const auto& x : enumerate_group(2, 4)) {
        CHECK(member(x, f) == dominates(min_sequence(x), f));
        CHECK(member(x, min_sequence(x)));
    }
}

TEST_CASE("all_bounds counts Catalan") {
    long long expected[] = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 0; n <= 6; ++n) CHECK(all_bounds(n).size() == static_cast<size_t>(expected[n]));
    CHECK(all_bounds(2) == std::vector<FerrersBound>{parse_bound("1,2"), parse_bound("2,2")});
}

TEST_CASE("restricted enumeration equals filtering") {
    for (int r : {1, 2, 3})
        for (int n : {0, 1, 2, 3})
            for (const auto& f : all_bounds(n)) {
                auto direct = enumerate_restricted(r, n, f);
                std::set<ColoredPermutation> got(direct.begin(), direct.end());
                CHECK(got.size() == direct.size());

                std::set<ColoredPermutation> expected;
                for (const auto& pi : enumerate_group(r, n))
                    if (member(pi, f)) expected.insert(pi);
                CHECK(got == expected);
            }
}

TEST_CASE("restricted enumeration in DFS order") {
    auto rows = enumerate_restricted(1, 4, parse_bound("2,3,3,4"));
    REQUIRE(rows.size() == 4);
    CHECK(format_window(rows[0]) == "1,2,3,4");
    CHECK(format_window(rows[1]) == "1,3,2,4");
    CHECK(format_window(rows[2]) == "2,1,3,4");
    CHECK(format_window(rows[3]) == "2,3,1,4");
}

TEST_CASE("type D restricted enumeration") {
    for (int n : {1, 2, 3, 4})
        for (const auto& f : all_bounds(n)) {
            auto direct = enumerate_restricted_d(n, f);
            std::set<ColoredPermutation> got(direct.begin(), direct.end());
            CHECK(got.size() == direct.size());

            std::set<ColoredPermutation> expected;
            for (const auto& pi : enumerate_group_d(n))
                if (member(pi, f)) expected.insert(pi);
            CHECK(got == expected);
        }

    CHECK(enumerate_restricted_d(2, parse_bound("1,2")).size() == 2);
    CHECK(enumerate_restricted_d(2, parse_bound("2,2")).size() == 4);
}
