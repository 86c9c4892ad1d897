#include "doctest.h"
#include "helpers.hpp"
#include "k3bv/quasismooth.hpp"

using namespace k3bv;
using th::poly;

namespace {

// naive singular-point search mod p: F and every partial vanish, x != 0
bool naive_probe(const WPolynomial &F, int64_t p) {
    size_t n = F.nvars();
    std::vector<WPolynomial> parts;
    std::vector<std::vector<int64_t>> pc;
    std::vector<std::vector<Exponent>> pe;
    for (size_t i = 0; i < n; ++i) {
        std::vector<int64_t> c;
        std::vector<Exponent> e;
        for (size_t t = 0; t < F.nterms(); ++t)
            if (F.exps[t][i] > 0) {
                c.push_back(F.coefs[t] * F.exps[t][i]);
                Exponent r = F.exps[t];
                r[i]--;
                e.push_back(r);
            }
        pc.push_back(c);
        pe.push_back(e);
    }
    auto ev = [&](const std::vector<int64_t> &c, const std::vector<Exponent> &e, const std::vector<int64_t> &x) {
        int64_t s = 0;
        for (size_t t = 0; t < c.size(); ++t) {
            int64_t m = ((c[t] % p) + p) % p;
            for (size_t i = 0; i < n; ++i)
                for (int k = 0; k < e[t][i]; ++k) m = m * x[i] % p;
            s = (s + m) % p;
        }
        return s;
    };
    std::vector<int64_t> x(n, 0);
    int64_t total = 1;
    for (size_t i = 0; i < n; ++i) total *= p;
    for (int64_t code = 1; code < total; ++code) {
        int64_t c = code;
        for (size_t i = 0; i < n; ++i) x[i] = c % p, c /= p;
        if (ev(F.coefs, F.exps, x)) continue;
        bool all = true;
        for (size_t i = 0; i < n && all; ++i)
            if (ev(pc[i], pe[i], x)) all = false;
        if (all) return false;
    }
    return true;
}

WPolynomial fermat4() { return th::diag(Weight{1, 1, 1, 1}, {1, 1, 1, 1}, {4, 4, 4, 4}); }

}  // namespace

TEST_CASE("combinatorial_form_check") {
    auto v6 = combinatorial_form_check(th::eq(6));
    CHECK(v6.combinatorial_pass);

    auto F19 = poly(Weight{3, 2, 2, 1}, {1, 1, 1, 1}, {{2, 1, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 8}});
    auto v19 = combinatorial_form_check(F19);
    CHECK(v19.combinatorial_pass);
    CHECK(v19.forms[1] == Form::power_plus);
    CHECK(v19.forms[0] == Form::power_times);

    // x0^2 x1 + x0 x2^3 + x1^3 x3 + x3^7 matches the forms and is quasi-smooth, but no coordinate
    // involution preserves it, so it does not contradict the empty search for this weight
    auto q = poly(Weight{5, 4, 3, 2}, {1, 1, 1, 1}, {{2, 1, 0, 0}, {1, 0, 3, 0}, {0, 3, 0, 1}, {0, 0, 0, 7}});
    CHECK(combinatorial_form_check(q).combinatorial_pass);
    CHECK(quasismooth_exact(q));
    // x0^2 x1 + x1^3 x3 + x2^4 x3 + x3^7: x3 matches no form
    auto bad = poly(Weight{5, 4, 3, 2}, {1, 1, 1, 1}, {{2, 1, 0, 0}, {0, 3, 0, 1}, {0, 0, 4, 1}, {0, 0, 0, 7}});
    CHECK_FALSE(combinatorial_form_check(bad).combinatorial_pass);

    // w never appears
    auto abs = poly(Weight{1, 1, 1, 1}, {1, 1, 1}, {{4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}});
    auto va = combinatorial_form_check(abs);
    CHECK_FALSE(va.combinatorial_pass);
    CHECK(va.forms[3] == Form::absent);
    CHECK(va.diagnostic.find("untouched") != std::string::npos);
}

TEST_CASE("quasismooth_exact") {
    CHECK(quasismooth_exact(fermat4()));
    auto abs = poly(Weight{1, 1, 1, 1}, {1, 1, 1}, {{4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}});
    CHECK_FALSE(quasismooth_exact(abs));
    auto F60 = poly(Weight{7, 6, 4, 1}, {1, 1, 1, 1}, {{2, 0, 1, 0}, {0, 3, 0, 0}, {0, 1, 3, 0}, {0, 0, 0, 18}});
    CHECK(quasismooth_exact(F60));
    // a cone over a nodal curve
    auto node = poly(Weight{1, 1, 1}, {1, 1, 1}, {{2, 0, 0}, {0, 2, 0}, {1, 1, 0}});
    CHECK_FALSE(quasismooth_exact(node));
}

TEST_CASE("quasismooth_fp_probe") {
    CHECK(quasismooth_fp_probe(fermat4(), 7));
    auto abs = poly(Weight{1, 1, 1, 1}, {1, 1, 1}, {{4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}});
    CHECK_FALSE(quasismooth_fp_probe(abs, 5));
    CHECK(quasismooth_fp_probe(th::eq(6), 11));
    CHECK_THROWS_AS(quasismooth_fp_probe(th::diag(Weight{1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, {5, 5, 5, 5, 5}), 101),
                    SearchTooLarge);
}

TEST_CASE("probe agrees with a naive search") {
    for (int id : {6, 8, 19, 42, 60, 78, 89})
        for (int64_t p : {7, 11}) CHECK(quasismooth_fp_probe(th::eq(id), p) == naive_probe(th::eq(id), p));
    auto abs = poly(Weight{1, 1, 1, 1}, {1, 1, 1}, {{4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}});
    CHECK(quasismooth_fp_probe(abs, 7) == naive_probe(abs, 7));
}

TEST_CASE("combinatorial pass implies exact pass on the dataset") {
    for (auto &r : th::data().records) {
        if (!r.equation) continue;
        auto v = combinatorial_form_check(*r.equation);
        if (v.combinatorial_pass) CHECK_MESSAGE(quasismooth_exact(*r.equation), "#" << r.id);
    }
}

TEST_CASE("printed equation of #75 is not quasi-smooth; restoring y^2 z^3 fixes it") {
    const WPolynomial &F = th::eq(75);
    CHECK_FALSE(quasismooth_exact(F));
    // the line x0 = w = 0 meets dF/dw = -(y^4 + z^5) = 0
    std::vector<int64_t> c = F.coefs;
    std::vector<Exponent> e = F.exps;
    c.push_back(-1);
    e.push_back({0, 2, 3, 0});
    WPolynomial G(F.weight, c, e);
    CHECK(quasismooth_exact(G));
}
