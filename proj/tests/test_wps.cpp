#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace k3bv;
using th::poly;

namespace {

// independent count: recursion over the last variable
int64_t count_rec(const std::vector<int64_t> &w, size_t i, int64_t d) {
    if (i + 1 == w.size()) return d % w[i] == 0 ? 1 : 0;
    int64_t s = 0;
    for (int64_t e = 0; e * w[i] <= d; ++e) s += count_rec(w, i + 1, d - e * w[i]);
    return s;
}

}  // namespace

TEST_CASE("normalize_weight") {
    CHECK(normalize_weight(Weight{2, 2, 1}) == Weight{1, 1, 1});
    CHECK(normalize_weight(Weight{15, 10, 2}) == Weight{3, 1, 1});
    CHECK(normalize_weight(Weight{1, 1, 1, 1}) == Weight{1, 1, 1, 1});
    CHECK(normalize_weight(Weight{10, 3, 2}) == Weight{5, 3, 1});
    CHECK(Weight{5, 2, 2, 1}.normalized());
    CHECK_FALSE(Weight{2, 2, 1}.normalized());
}

TEST_CASE("normalize_weight is idempotent on random weights") {
    std::mt19937 rng(7);
    for (int t = 0; t < 300; ++t) {
        size_t n = 3 + rng() % 2;
        std::vector<int64_t> v(n);
        for (auto &x : v) x = 1 + rng() % 30;
        Weight a = normalize_weight(Weight(v));
        CHECK(a.normalized());
        CHECK(normalize_weight(a) == a);
    }
}

TEST_CASE("monomials_of_degree") {
    auto m = monomials_of_degree(Weight{5, 4, 3, 2}, 14);
    REQUIRE(m.size() == 13);
    // the 13 monomials of degree 14 for this weight; the printed list has x1 x2^3 (degree 13) for x0 x2^3
    std::vector<Exponent> listed = {{2, 1, 0, 0}, {2, 0, 0, 2}, {1, 1, 1, 1}, {1, 0, 3, 0}, {1, 0, 1, 3},
                                    {0, 3, 0, 1}, {0, 2, 2, 0}, {0, 2, 0, 3}, {0, 1, 2, 2}, {0, 1, 0, 5},
                                    {0, 0, 4, 1}, {0, 0, 2, 4}, {0, 0, 0, 7}};
    for (auto &e : listed) CHECK(std::find(m.begin(), m.end(), e) != m.end());

    CHECK(monomials_of_degree(Weight{1, 1, 1, 1}, 4).size() == 35);
    auto c = monomials_of_degree(Weight{3, 1, 1, 1}, 6);
    CHECK(std::find(c.begin(), c.end(), Exponent{2, 0, 0, 0}) != c.end());
    CHECK(monomials_of_degree(Weight{2, 2}, 3).empty());
}

TEST_CASE("monomials_of_degree against recursive count") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 200; ++t) {
        std::vector<int64_t> v(4);
        for (auto &x : v) x = 1 + rng() % 30;
        int64_t d = 1 + rng() % 90;
        Weight w(v);
        auto m = monomials_of_degree(w, d);
        CHECK(int64_t(m.size()) == count_rec(v, 0, d));
        for (auto &e : m) CHECK(weighted_degree(w, e) == d);
        CHECK(std::is_sorted(m.rbegin(), m.rend()));
        CHECK(std::adjacent_find(m.begin(), m.end()) == m.end());
    }
}

TEST_CASE("WPolynomial validation") {
    CHECK_THROWS_AS(poly(Weight{1, 1}, {1, 1}, {{2, 0}, {0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(poly(Weight{1, 1}, {1, 1}, {{2, 0}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(poly(Weight{1, 1}, {1, 0}, {{2, 0}, {0, 2}}), std::invalid_argument);
    auto F = th::diag(Weight{1, 1, 1, 1}, {1, 1, 1, 1}, {4, 4, 4, 4});
    CHECK(F.delsarte());
    CHECK(F.diagonal());
    CHECK(F.degree == 4);
}

TEST_CASE("reduce_curve_model") {
    auto a = reduce_curve_model(Weight{2, 2, 1}, th::diag(Weight{2, 2, 1}, {1, 1, 1}, {5, 5, 10}));
    CHECK(a.weight == Weight{1, 1, 1});
    CHECK(a.degree == 5);
    CHECK(a.f.exps == std::vector<Exponent>{{5, 0, 0}, {0, 5, 0}, {0, 0, 5}});

    auto b = reduce_curve_model(Weight{10, 3, 2}, th::diag(Weight{10, 3, 2}, {1, 1, 1}, {3, 10, 15}));
    CHECK(b.weight == Weight{5, 3, 1});
    CHECK(b.degree == 15);
    CHECK(b.f.exps == std::vector<Exponent>{{3, 0, 0}, {0, 5, 0}, {0, 0, 15}});

    auto F = poly(Weight{1, 1, 1}, {1, 1, 1}, {{3, 0, 0}, {1, 2, 0}, {0, 0, 3}});
    auto c = reduce_curve_model(Weight{1, 1, 1}, F);
    CHECK(c.weight == Weight{1, 1, 1});
    CHECK(c.f.exps == F.exps);
    CHECK(c.degree == 3);

    // odd degree in (2,2,1): every monomial has an odd power of the weight-1 variable
    auto G = poly(Weight{2, 2, 1}, {1, 1, 1}, {{1, 0, 1}, {0, 1, 1}, {0, 0, 3}});
    CHECK_THROWS_AS(reduce_curve_model(Weight{2, 2, 1}, G), NonReducible);
}

TEST_CASE("transpose_exponents") {
    // x0^8+x1^8+x2^4+x3^3+x3 x4^4 in (3,3,6,8,4)
    auto F = poly(Weight{3, 3, 6, 8, 4}, {1, 1, 1, 1, 1},
                  {{8, 0, 0, 0, 0}, {0, 8, 0, 0, 0}, {0, 0, 4, 0, 0}, {0, 0, 0, 3, 0}, {0, 0, 0, 1, 4}});
    auto T = transpose_exponents(F);
    CHECK(T.weight == Weight{1, 1, 2, 2, 2});
    CHECK(T.poly.degree == 8);
    // the printed transpose reads x2^3 x3 for x3^3 x4 (as printed its cone is singular at (0:0:0:1:0))
    std::vector<Exponent> want = {{8, 0, 0, 0, 0}, {0, 8, 0, 0, 0}, {0, 0, 4, 0, 0}, {0, 0, 0, 3, 1}, {0, 0, 0, 0, 4}};
    auto got = T.poly.exps;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);

    // twice returns the original
    auto TT = transpose_exponents(T.poly);
    CHECK(TT.weight == F.weight);
    auto g2 = TT.poly.exps, f2 = F.exps;
    std::sort(g2.begin(), g2.end());
    std::sort(f2.begin(), f2.end());
    CHECK(g2 == f2);

    // diagonal polynomials are self-transposed
    auto D = th::diag(Weight{3, 3, 6, 8, 4}, {1, 1, 1, 1, 1}, {8, 8, 4, 3, 6});
    auto DT = transpose_exponents(D);
    CHECK(DT.weight == D.weight);
    CHECK(DT.poly.exps == D.exps);
}

TEST_CASE("transpose of a singular matrix") {
    auto F = poly(Weight{1, 1, 1}, {1, 1, 1}, {{2, 1, 0}, {1, 2, 0}, {0, 0, 3}});
    CHECK_NOTHROW(transpose_exponents(F));
    auto G = poly(Weight{1, 1, 2}, {1, 1, 1}, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}});
    CHECK_THROWS_AS(transpose_exponents(G), NotInvertible);
    CHECK_THROWS_AS(fermat_cover_degree(G), NotInvertible);
}

TEST_CASE("fermat_cover_degree") {
    CHECK(fermat_cover_degree(th::diag(Weight{1, 1, 1, 1}, {1, 1, 1, 1}, {4, 4, 4, 4})) == 4);
    CHECK(fermat_cover_degree(th::diag(Weight{21, 14, 6, 1}, {1, -1, -1, -1}, {2, 3, 7, 42})) == 42);
    // x0^2 - x1^3 - x1 x2^7 - x3^14 in (21,14,4,3)
    auto M = poly(Weight{21, 14, 4, 3}, {1, -1, -1, -1}, {{2, 0, 0, 0}, {0, 3, 0, 0}, {0, 1, 7, 0}, {0, 0, 0, 14}});
    CHECK(fermat_cover_degree(M) == 42);
    // diagonal: lcm of exponents
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        std::vector<int> e(4);
        for (auto &x : e) x = 2 + rng() % 11;
        int64_t L = 1;
        for (int x : e) L = std::lcm<int64_t>(L, x);
        std::vector<int64_t> w(4);
        for (int i = 0; i < 4; ++i) w[i] = L / e[i];
        CHECK(fermat_cover_degree(th::diag(Weight(w), {1, 1, 1, 1}, e)) == L);
    }
}

TEST_CASE("int_det") {
    CHECK(int_det({{-4, 2, 0, 2}, {2, -4, 0, 0}, {0, 0, -4, 2}, {2, 0, 2, -2}}) == -16);
    CHECK(int_det({{-4, 2, 0, 0}, {2, -4, 0, 0}, {0, 0, -4, 0}, {0, 0, 0, 12}}) == -576);
}
