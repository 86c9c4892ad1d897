#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "k3bv/quasismooth.hpp"
#include "k3bv/singular.hpp"

using namespace k3bv;

namespace {

// b1 - 1/(b2 - 1/(...)) with plain integer fractions
std::pair<int64_t, int64_t> eval_hj(const std::vector<int64_t> &b) {
    int64_t num = b.back(), den = 1;
    for (size_t i = b.size() - 1; i-- > 0;) {
        // b_i - den/num
        int64_t n2 = b[i] * num - den, d2 = num;
        num = n2, den = d2;
    }
    int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

// (n, total points) multiset
std::vector<std::pair<int64_t, int64_t>> types(const std::vector<QuotientSingularity> &s) {
    std::vector<std::pair<int64_t, int64_t>> v;
    for (auto &x : s) v.push_back({x.n, x.point_count});
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("hj_expand examples") {
    CHECK(hj_expand(7, 6).digits == std::vector<int64_t>{2, 2, 2, 2, 2, 2});
    CHECK(hj_expand(5, 2).digits == std::vector<int64_t>{3, 2});
    CHECK(hj_expand(10, 7).digits == std::vector<int64_t>{2, 2, 4});
    CHECK_THROWS(hj_expand(6, 4));
    CHECK_THROWS(hj_expand(3, 3));
}

TEST_CASE("hj_expand re-evaluates exactly") {
    for (int64_t n = 2; n <= 60; ++n)
        for (int64_t q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            auto h = hj_expand(n, q);
            CHECK(eval_hj(h.digits) == std::pair<int64_t, int64_t>{n, q});
            CHECK(hj_evaluate(h.digits) == Rational(n, q));
            for (auto b : h.digits) CHECK(b >= 2);
        }
}

TEST_CASE("singular_loci: #8") {
    auto s = singular_loci(th::eq(8));
    CHECK(types(s) == std::vector<std::pair<int64_t, int64_t>>{{2, 2}, {3, 2}});
    for (auto &x : s) {
        CHECK(x.q == x.n - 1);
        CHECK(x.chain.size() == size_t(x.n - 1));
    }
}

TEST_CASE("singular_loci: #60") {
    auto s = singular_loci(th::eq(60));
    CHECK(types(s) == std::vector<std::pair<int64_t, int64_t>>{{2, 1}, {4, 1}, {7, 1}});
    for (auto &x : s) {
        if (x.n == 7) {
            CHECK(x.vertex());
            CHECK(x.support == std::vector<int>{0});
            CHECK(x.shorthand() == "A_6");
        }
        if (x.n == 4) CHECK(x.support == std::vector<int>{2});
        if (x.n == 2) CHECK(x.support == std::vector<int>{1, 2});
    }
}

TEST_CASE("singular_loci: #6 and #78") {
    auto s6 = singular_loci(th::eq(6));
    REQUIRE(s6.size() == 1);
    CHECK(s6[0].n == 2);
    CHECK(s6[0].point_count == 5);
    CHECK(s6[0].vanishing == std::vector<int>{0, 3});

    auto s78 = singular_loci(th::eq(78));
    CHECK(types(s78) == std::vector<std::pair<int64_t, int64_t>>{{2, 1}, {4, 1}, {6, 1}});
}

TEST_CASE("exceptional_rank") {
    CHECK(exceptional_rank(th::eq(32)) == 9);
    CHECK(exceptional_rank(th::eq(37)) == 8);
    CHECK(exceptional_rank(th::eq(48)) == 15);
    CHECK(exceptional_rank(th::eq(11)) == 11);
    CHECK(exceptional_rank(th::eq(36)) == 12);
}

TEST_CASE("chains are the negated expansions, types are choice independent") {
    for (auto &r : th::data().records) {
        if (!r.equation || !quasismooth_exact(*r.equation)) continue;
        auto s = singular_loci(*r.equation);
        for (auto &x : s) {
            CHECK(std::gcd(x.n, x.q) == 1);
            // Gorenstein: the local action preserves the 2-form, so q = n-1
            CHECK_MESSAGE(x.q == x.n - 1, "#" << r.id);
            CHECK(x.chain.size() == size_t(x.n - 1));
            std::vector<int64_t> neg;
            for (auto b : hj_expand(x.n, x.q).digits) neg.push_back(-b);
            CHECK_MESSAGE(x.chain == neg, "#" << r.id);
            if (x.vertex()) {
                auto ch = vertex_type_choices(*r.equation, x.support[0]);
                for (auto q : ch) CHECK_MESSAGE(q == ch[0], "#" << r.id);
            }
        }
    }
}

TEST_CASE("singular_loci rejects non-quasi-smooth input") {
    CHECK_THROWS_AS(singular_loci(th::eq(75)), NotQuasiSmooth);
}
