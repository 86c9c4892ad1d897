#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "k3bv/involutions.hpp"
#include "k3bv/quasismooth.hpp"

using namespace k3bv;
using th::poly;

namespace {

bool contains(const std::vector<InvolutionCandidate> &v, const WPolynomial &F, int var) {
    auto key = [](const WPolynomial &P) {
        auto e = P.exps;
        std::sort(e.begin(), e.end());
        return e;
    };
    for (auto &c : v)
        if (c.variable_index == var && key(c.equation) == key(F)) return true;
    return false;
}

}  // namespace

TEST_CASE("semi_invariant_sign") {
    CHECK(semi_invariant_sign(th::eq(6), 0) == 1);
    auto F19 = poly(Weight{3, 2, 2, 1}, {1, 1, 1, 1}, {{2, 1, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 8}});
    CHECK(semi_invariant_sign(F19, 0) == 1);
    CHECK(semi_invariant_sign(F19, 1) == std::nullopt);
    CHECK(semi_invariant_sign(th::eq(2), 0) == std::nullopt);
    CHECK(semi_invariant_sign(th::eq(2), 1) == 1);
    auto K = poly(Weight{1, 1, 1, 1}, {1, 1, 1, 1}, {{3, 1, 0, 0}, {1, 3, 0, 0}, {1, 0, 3, 0}, {1, 0, 0, 3}});
    CHECK(semi_invariant_sign(K, 0) == -1);
}

TEST_CASE("classify_involution") {
    CHECK(classify_involution(th::eq(6), 0) == InvolutionClass::non_symplectic);
    CHECK(classify_involution(th::eq(2), 1) == InvolutionClass::non_symplectic);
    auto K = poly(Weight{1, 1, 1, 1}, {1, 1, 1, 1}, {{3, 1, 0, 0}, {1, 3, 0, 0}, {1, 0, 3, 0}, {1, 0, 0, 3}});
    CHECK(classify_involution(K, 0) == InvolutionClass::symplectic);
    CHECK_THROWS_AS(classify_involution(th::eq(2), 0), NotAnAutomorphism);

    // invariant under reordering monomials and scaling coefficients
    auto F = th::eq(60);
    std::vector<int64_t> c(F.coefs.rbegin(), F.coefs.rend());
    std::vector<Exponent> e(F.exps.rbegin(), F.exps.rend());
    for (auto &x : c) x *= -3;
    WPolynomial G(F.weight, c, e);
    for (size_t i = 0; i < 4; ++i) {
        auto s = semi_invariant_sign(F, i);
        CHECK(s == semi_invariant_sign(G, i));
        if (s) CHECK(classify_involution(F, i) == classify_involution(G, i));
    }
}

TEST_CASE("delsarte_search examples") {
    auto a = delsarte_search(Weight{5, 2, 2, 1});
    CHECK(contains(a, th::eq(6), 0));
    for (auto &c : a) {
        CHECK(c.classification == InvolutionClass::non_symplectic);
        CHECK(c.equation.nterms() == 4);
        CHECK(quasismooth_exact(c.equation));
    }

    auto b = delsarte_search(Weight{3, 2, 2, 1});
    auto F19 = poly(Weight{3, 2, 2, 1}, {1, 1, 1, 1}, {{2, 1, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 8}});
    auto G19 = poly(Weight{3, 2, 2, 1}, {1, 1, 1, 1}, {{2, 1, 0, 0}, {0, 3, 1, 0}, {0, 0, 4, 0}, {0, 0, 0, 8}});
    CHECK(contains(b, F19, 0));
    CHECK(contains(b, G19, 0));

    CHECK(delsarte_search(Weight{5, 4, 3, 2}).empty());
    auto q = poly(Weight{5, 4, 3, 2}, {1, 1, 1, 1}, {{2, 1, 0, 0}, {1, 0, 3, 0}, {0, 3, 0, 1}, {0, 0, 0, 7}});
    for (size_t i = 0; i < 4; ++i) CHECK(semi_invariant_sign(q, i) == std::nullopt);
}

TEST_CASE("delsarte_search is deterministic") {
    auto a = delsarte_search(Weight{7, 6, 4, 1});
    auto b = delsarte_search(Weight{7, 6, 4, 1});
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].equation.exps == b[i].equation.exps);
        CHECK(a[i].variable_index == b[i].variable_index);
    }
}

TEST_CASE("no coordinate involution for the three weights without one") {
    for (int id : {15, 53, 54}) {
        const WPolynomial &F = th::eq(id);
        for (size_t i = 0; i < 4; ++i) CHECK_MESSAGE(semi_invariant_sign(F, i) != 1, "#" << id << " var " << i);
    }
}
