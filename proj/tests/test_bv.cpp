#include "doctest.h"
#include "helpers.hpp"
#include "k3bv/bv.hpp"
#include "k3bv/quasismooth.hpp"

using namespace k3bv;

TEST_CASE("hodge_numbers") {
    auto a = hodge_numbers(6, 4);
    CHECK(a.h11 == 15);
    CHECK(a.h21 == 39);
    auto b = hodge_numbers(10, 0);
    CHECK(b.h11 == 35);
    CHECK(b.h21 == 35);
    CHECK(b.euler == 0);
    auto c = hodge_numbers(13, 3);
    CHECK(c.h11 == 38);
    CHECK(c.h21 == 20);
    CHECK(c.euler == 36);
    auto d = hodge_numbers(10, 4);
    CHECK(d.h11 == 27);
    CHECK(d.h21 == 27);
    auto e = hodge_numbers(7, 3);
    CHECK(e.h11 == 20);
    CHECK(e.h21 == 38);
    CHECK(e.euler == -36);
    CHECK_THROWS(hodge_numbers(7, 4));
}

TEST_CASE("formula families agree on every valid pair") {
    for (int r = 1; r <= 20; ++r)
        for (int a = 0; a <= 11; ++a) {
            if ((r - a) % 2 || 22 - r - a < 0 || r - a < 0) continue;
            auto h = hodge_numbers(r, a);
            int g = (22 - r - a) / 2, k = (r - a) / 2;
            CHECK(h.h11 == 1 + r + 4 * (k + 1));
            CHECK(h.h21 == 1 + (20 - r) + 4 * g);
            CHECK(h.h11 == 11 + 5 * (k + 1) - g);
            CHECK(h.h21 == 11 + 5 * g - (k + 1));
            CHECK(h.h11 + h.h21 == 70 - 4 * a);
            CHECK(h.euler == 12 * (r - 10));
            auto o = orbifold_hodge(g, k, r);
            CHECK(o.h11 == h.h11);
            CHECK(o.h21 == h.h21);
            auto f = hodge_from_fixed(g, k);
            CHECK(f.h11 == h.h11);
        }
}

TEST_CASE("orbifold_hodge") {
    auto a = orbifold_hodge(6, 5, 10);
    CHECK(a.h11 == 35);
    CHECK(a.h21 == 35);
    auto b = orbifold_hodge(4, 3, 10);
    CHECK(b.h11 == 27);
    CHECK(b.h21 == 27);
    auto c = orbifold_hodge(6, 1, 6);
    CHECK(c.h11 == 15);
    CHECK(c.h21 == 39);
    CHECK_THROWS(orbifold_hodge(6, 1, 7));
}

TEST_CASE("twist_model") {
    auto a = twist_model(th::eq(6), Curve::E2);
    CHECK(a.weight5 == Weight{5, 5, 4, 4, 2});
    CHECK(a.degree == 20);
    CHECK(a.quasi_smooth);
    CHECK(quasismooth_exact(a.equation));

    auto b = twist_model(th::eq(45), Curve::E3);
    CHECK(b.weight5 == Weight{28, 14, 27, 12, 3});
    CHECK(b.degree == 84);

    auto c = twist_model(th::eq(14), Curve::E2);
    CHECK(c.weight5 == Weight{21, 21, 28, 12, 2});
    CHECK(c.degree == 84);

    auto d = twist_model(th::eq(11), Curve::E2);
    CHECK(d.weight5 == Weight{15, 15, 20, 6, 4});
    CHECK(d.degree == 60);

    CHECK_THROWS_AS(twist_model(th::eq(8), Curve::E2), TwistUnsupported);
    CHECK_THROWS_AS(twist_model(th::eq(8), Curve::E3), TwistUnsupported);
    CHECK_THROWS_AS(twist_model(th::eq(6), Curve::E3), TwistUnsupported);
}

TEST_CASE("twist models are Calabi-Yau") {
    for (auto &r : th::data().records) {
        if (!r.equation || r.involution_variable != 0) continue;
        for (Curve c : {Curve::E2, Curve::E3}) {
            try {
                auto t = twist_model(*r.equation, c);
                CHECK_MESSAGE(t.degree == t.weight5.sum(), "#" << r.id);
                if (borcea_form(*r.equation)) {
                    CHECK(t.degree == (c == Curve::E2 ? 4 : 6) * r.weight[0]);
                    CHECK(t.quasi_smooth);
                }
            } catch (const TwistUnsupported &) {
            }
        }
    }
    // x0^2 x_i type: the model is flagged
    auto t = twist_model(th::eq(89), Curve::E2);
    CHECK_FALSE(t.quasi_smooth);
    CHECK(t.degree == t.weight5.sum());
}

TEST_CASE("special twist models") {
    for (int id : {2, 52, 84}) {
        REQUIRE(has_special_twist_model(id));
        auto t = special_twist_model(id);
        CHECK(t.degree == t.weight5.sum());
    }
    CHECK_FALSE(has_special_twist_model(6));
}

TEST_CASE("mirror_hodge_check") {
    auto [x, y] = mirror_hodge_check(NikulinInvariants{7, 3, 0});
    CHECK(x.h11 == 20);
    CHECK(x.h21 == 38);
    CHECK(x.euler == -36);
    CHECK(y.h11 == 38);
    CHECK(y.h21 == 20);
    CHECK(y.euler == 36);
    auto [u, v] = mirror_hodge_check(NikulinInvariants{10, 0, 0});
    CHECK(u.h11 == v.h11);
    CHECK(u.euler == 0);
    CHECK_THROWS_AS(mirror_hodge_check(NikulinInvariants{20, 2, 1}), NoMirror);
    try {
        mirror_hodge_check(NikulinInvariants{20, 2, 1});
    } catch (const NoMirror &e) {
        CHECK(std::string(e.what()).find("pale") != std::string::npos);
    }
}

TEST_CASE("orbifold count from the fixed curves, type III") {
    // (4,3,3,2) with y negated: two elliptic curves
    K3Record r = th::data().by_id(2);
    auto rep = fixed_locus(*r.equation, 1);
    REQUIRE(rep.type == FixedType::III);
    auto h = orbifold_hodge(rep, 10);
    CHECK(h.h11 == 19);
    CHECK(h.h21 == 19);
    auto ref = hodge_numbers(10, 8);
    CHECK(ref.h11 == 19);
    CHECK(ref.h21 == 19);
    CHECK(h.a == 8);
    // type I agrees with the (g,k) form
    auto rep6 = fixed_locus(th::eq(6), 0);
    auto h6 = orbifold_hodge(rep6, 6);
    CHECK(h6.h11 == 15);
    CHECK(h6.h21 == 39);
}
