#include "k3bv/bv.hpp"

#include <map>

namespace k3bv {

const char *curve_name(Curve c) { return c == Curve::E2 ? "E2" : "E3"; }

BVHodge hodge_numbers(int r, int a) {
    if ((r - a) % 2) throw std::invalid_argument("r and a must have the same parity");
    int g = (22 - r - a) / 2, k = (r - a) / 2;
    if (g < 0 || k < 0) throw std::invalid_argument("(r, a) is not of the curve-plus-lines type");
    BVHodge h;
    h.r = r, h.a = a, h.g = g, h.k = k;
    h.h11 = 5 + 3 * r - 2 * a;
    h.h21 = 65 - 3 * r - 2 * a;
    int N = k + 1, Np = g;
    if (h.h11 != 1 + r + 4 * N || h.h11 != 11 + 5 * N - Np) throw InconsistentHodge("h11 families disagree");
    if (h.h21 != 1 + (20 - r) + 4 * g || h.h21 != 11 + 5 * Np - N) throw InconsistentHodge("h21 families disagree");
    h.euler = 2 * (h.h11 - h.h21);
    if (h.euler != 12 * (N - Np) || h.euler != 12 * (r - 10)) throw InconsistentHodge("euler families disagree");
    return h;
}

BVHodge hodge_from_fixed(int g, int k) { return hodge_numbers(11 - g + k, 11 - g - k); }

BVHodge orbifold_hodge(int g, int k, int r) {
    if (r != 11 - g + k) throw std::invalid_argument("r must equal 11 - g + k");
    BVHodge h;
    h.r = r, h.g = g, h.k = k, h.a = 11 - g - k;
    h.h11 = (1 + r) + 4 * (k + 1);
    h.h21 = (1 + (20 - r)) + 4 * g;
    h.euler = 2 * (h.h11 - h.h21);
    BVHodge ref = hodge_numbers(h.r, h.a);
    if (ref.h11 != h.h11 || ref.h21 != h.h21) throw InconsistentHodge("orbifold decomposition disagrees");
    return h;
}

BVHodge orbifold_hodge(const FixedLocusReport &rep, int r) {
    int N = int(rep.components.size()), Np = 0;
    for (auto &c : rep.components) Np += c.genus;
    BVHodge h;
    h.r = r, h.g = rep.g, h.k = rep.k;
    h.h11 = (1 + r) + 4 * N;
    h.h21 = (1 + (20 - r)) + 4 * Np;
    h.euler = 2 * (h.h11 - h.h21);
    h.a = (5 + 3 * r - h.h11) / 2;
    return h;
}

TwistModel twist_model(const WPolynomial &F, Curve c) {
    if (F.nvars() != 4) throw std::invalid_argument("twist model needs a surface in P^3");
    const Weight &w = F.weight;
    int64_t w0 = w[0];
    // split F into the x0 part and f(x1,x2,x3)
    int lin = -1;  // x0^2 x_lin
    std::vector<int64_t> fc;
    std::vector<Exponent> fe;
    int64_t sq_coef = 0;
    for (size_t k = 0; k < F.nterms(); ++k) {
        auto &e = F.exps[k];
        if (e[0] == 0) {
            fc.push_back(F.coefs[k]);
            fe.push_back(e);
            continue;
        }
        if (e[0] != 2) throw TwistUnsupported("x0 must appear only as x0^2 or x0^2 x_i");
        int others = 0, at = -1;
        for (int v = 1; v < 4; ++v)
            if (e[v]) others += e[v], at = v;
        if (others == 0) lin = 0;
        else if (others == 1) lin = at;
        else throw TwistUnsupported("x0 must appear only as x0^2 or x0^2 x_i");
        if (sq_coef) throw TwistUnsupported("more than one monomial involves x0");
        sq_coef = F.coefs[k];
    }
    if (!sq_coef) throw TwistUnsupported("no x0 term");
    if (w0 % 6 == 0) throw TwistUnsupported("w0 divisible by 6: no explicit twist map is known");
    if (c == Curve::E2 && w0 % 2 == 0) throw TwistUnsupported("E2 needs odd w0");
    if (c == Curve::E3 && (w0 % 2 || w0 % 3 == 0)) throw TwistUnsupported("E3 needs w0 even and prime to 3");
    TwistModel m;
    m.curve = c;
    int64_t s = c == Curve::E2 ? 2 : 3;
    m.weight5 = c == Curve::E2 ? Weight({w0, w0, 2 * w[1], 2 * w[2], 2 * w[3]})
                               : Weight({2 * w0, w0, 3 * w[1], 3 * w[2], 3 * w[3]});
    int64_t deg = s * F.degree;
    std::vector<int64_t> cs;
    std::vector<Exponent> es;
    // curve part times z_{lin+1} when x0^2 carries a linear factor; sign chosen so that the model is
    // (curve part) = -f / sq_coef, written with integer coefficients
    Exponent a(5, 0), b(5, 0);
    if (c == Curve::E2) a[0] = 4, b[1] = 4;
    else a[0] = 3, b[1] = 6;
    if (lin > 0) a[lin + 1] += 1, b[lin + 1] += 1;
    cs.push_back(sq_coef);
    es.push_back(a);
    cs.push_back(sq_coef);
    es.push_back(b);
    for (size_t k = 0; k < fe.size(); ++k) {
        Exponent e(5, 0);
        for (int v = 1; v < 4; ++v) e[v + 1] = fe[k][v];
        cs.push_back(fc[k]);
        es.push_back(e);
    }
    m.equation = WPolynomial(m.weight5, cs, es, deg);
    m.degree = deg;
    m.quasi_smooth = lin <= 0;
    if (lin > 0) m.note = "birational model only; not quasi-smooth";
    if (m.weight5.sum() != deg) throw std::logic_error("twist model is not Calabi-Yau");
    return m;
}

namespace {
struct Special {
    std::vector<int64_t> w;
    std::vector<Exponent> e;
};
const std::map<int, Special> &specials() {
    // (z0^4 + z1^4)^2 expanded, then the remaining terms
    static const std::map<int, Special> m = {
        {2, {{3, 3, 8, 6, 4}, {{8, 0, 0, 0, 0}, {4, 4, 0, 0, 0}, {0, 8, 0, 0, 0}, {0, 0, 3, 0, 0}, {0, 0, 0, 4, 0}, {0, 0, 0, 0, 6}}}},
        {52, {{9, 9, 24, 16, 14}, {{8, 0, 0, 0, 0}, {4, 4, 0, 0, 0}, {0, 8, 0, 0, 0}, {0, 0, 3, 0, 0}, {0, 0, 1, 3, 0}, {0, 0, 0, 1, 4}}}},
        {84, {{5, 5, 18, 14, 12}, {{8, 0, 0, 1, 0}, {4, 4, 0, 1, 0}, {0, 8, 0, 1, 0}, {0, 0, 3, 0, 0}, {0, 0, 1, 0, 3}, {0, 0, 0, 3, 1}}}},
    };
    return m;
}
}  // namespace

bool has_special_twist_model(int id) { return specials().count(id) > 0; }

TwistModel special_twist_model(int id) {
    auto it = specials().find(id);
    if (it == specials().end()) throw TwistUnsupported("no special twist model for #" + std::to_string(id));
    TwistModel m;
    m.curve = Curve::E2;
    m.weight5 = Weight(it->second.w);
    std::vector<int64_t> cs(it->second.e.size(), 1);
    cs[1] = 2;
    m.equation = WPolynomial(m.weight5, cs, it->second.e);
    m.degree = m.equation.degree;
    m.quasi_smooth = false;
    m.note = "birational model only; not quasi-smooth";
    if (m.weight5.sum() != m.degree) throw std::logic_error("special model is not Calabi-Yau");
    return m;
}

std::pair<BVHodge, BVHodge> mirror_hodge_check(const NikulinInvariants &t) {
    auto mr = mirror_triplet(t);
    if (!mr.mirror) throw NoMirror("no mirror: " + mr.reason);
    BVHodge x = hodge_numbers(t.r, t.a), y = hodge_numbers(mr.mirror->r, mr.mirror->a);
    if (x.h11 != y.h21 || x.h21 != y.h11 || x.euler != -y.euler) throw InconsistentHodge("mirror does not swap");
    return {x, y};
}

}  // namespace k3bv
