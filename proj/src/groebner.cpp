#include "groebner.hpp"

#include <algorithm>

namespace k3bv::gb {

bool Order::greater(const Exponent &a, const Exponent &b) const {
    int64_t da = 0, db = 0;
    for (size_t i = 0; i < a.size(); ++i) da += w[i] * a[i], db += w[i] * b[i];
    if (da != db) return da > db;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Poly make_poly(const Order &o, std::vector<Term> t) {
    std::sort(t.begin(), t.end(), [&](const Term &x, const Term &y) { return o.greater(x.e, y.e); });
    Poly out;
    for (auto &x : t) {
        if (!out.empty() && out.back().e == x.e) out.back().c += x.c;
        else out.push_back(x);
        if (out.back().c == 0) out.pop_back();
    }
    return out;
}

Poly partial(const Order &o, const WPolynomial &F, size_t i) {
    std::vector<Term> t;
    for (size_t k = 0; k < F.nterms(); ++k) {
        if (F.exps[k][i] == 0) continue;
        Exponent e = F.exps[k];
        Rational c = Rational(F.coefs[k]) * e[i];
        e[i] -= 1;
        t.push_back({e, c});
    }
    return make_poly(o, t);
}

static bool divides(const Exponent &a, const Exponent &b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

static Exponent lcm_exp(const Exponent &a, const Exponent &b) {
    Exponent e(a.size());
    for (size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
    return e;
}

static bool coprime(const Exponent &a, const Exponent &b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

// f - c * x^m * g
static Poly sub_mul(const Order &o, const Poly &f, const Rational &c, const Exponent &m, const Poly &g) {
    Poly out;
    out.reserve(f.size() + g.size());
    size_t i = 0, j = 0;
    Exponent e(m.size());
    auto shifted = [&](size_t k) {
        for (size_t v = 0; v < m.size(); ++v) e[v] = g[k].e[v] + m[v];
        return e;
    };
    while (i < f.size() || j < g.size()) {
        if (j == g.size()) {
            out.push_back(f[i++]);
            continue;
        }
        Exponent ge = shifted(j);
        if (i == f.size() || o.greater(ge, f[i].e)) {
            out.push_back({ge, -c * g[j].c});
            ++j;
        } else if (o.greater(f[i].e, ge)) {
            out.push_back(f[i++]);
        } else {
            Rational v = f[i].c - c * g[j].c;
            if (v != 0) out.push_back({ge, v});
            ++i, ++j;
        }
    }
    return out;
}

static void make_monic(Poly &p) {
    if (p.empty()) return;
    Rational lc = p[0].c;
    for (auto &t : p) t.c /= lc;
}

static Poly reduce(const Order &o, Poly p, const std::vector<Poly> &G) {
    Poly r;
    while (!p.empty()) {
        bool hit = false;
        for (auto &g : G) {
            if (g.empty() || !divides(g[0].e, p[0].e)) continue;
            Exponent m(p[0].e.size());
            for (size_t v = 0; v < m.size(); ++v) m[v] = p[0].e[v] - g[0].e[v];
            p = sub_mul(o, p, p[0].c / g[0].c, m, g);
            hit = true;
            break;
        }
        if (!hit) {
            r.push_back(p[0]);
            p.erase(p.begin());
        }
    }
    return r;
}

std::vector<Poly> groebner(const Order &o, std::vector<Poly> gens, size_t max_size) {
    std::vector<Poly> G;
    for (auto &g : gens) {
        Poly h = reduce(o, g, G);
        if (h.empty()) continue;
        make_monic(h);
        G.push_back(h);
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t j = 0; j < G.size(); ++j)
        for (size_t i = 0; i < j; ++i) pairs.push_back({i, j});
    auto lcm_of = [&](const std::pair<size_t, size_t> &pr) { return lcm_exp(G[pr.first][0].e, G[pr.second][0].e); };
    while (!pairs.empty()) {
        // normal strategy: smallest lcm first
        auto best = pairs.begin();
        Exponent bl = lcm_of(*best);
        for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
            Exponent l = lcm_of(*it);
            if (o.greater(bl, l)) best = it, bl = l;
        }
        auto [i, j] = *best;
        pairs.erase(best);
        const Poly &f = G[i], &g = G[j];
        if (coprime(f[0].e, g[0].e)) continue;
        // chain criterion
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == i || k == j || !divides(G[k][0].e, bl)) continue;
            auto in = [&](size_t a, size_t b) {
                auto pr = std::make_pair(std::min(a, b), std::max(a, b));
                return std::find(pairs.begin(), pairs.end(), pr) != pairs.end();
            };
            if (!in(i, k) && !in(j, k)) skip = true;
        }
        if (skip) continue;
        Exponent mf(bl.size()), mg(bl.size());
        for (size_t v = 0; v < bl.size(); ++v) mf[v] = bl[v] - f[0].e[v], mg[v] = bl[v] - g[0].e[v];
        Poly s = sub_mul(o, Poly{}, Rational(-1) / f[0].c, mf, f);
        s = sub_mul(o, s, Rational(1) / g[0].c, mg, g);
        Poly h = reduce(o, s, G);
        if (h.empty()) continue;
        make_monic(h);
        G.push_back(h);
        if (G.size() > max_size) throw TooBig("groebner basis grew past the size guard");
        for (size_t k = 0; k + 1 < G.size(); ++k) pairs.push_back({k, G.size() - 1});
    }
    return G;
}

bool zero_dimensional(const std::vector<Poly> &basis, size_t nvars) {
    std::vector<bool> seen(nvars, false);
    for (auto &g : basis) {
        if (g.empty()) continue;
        int nz = 0, at = -1;
        for (size_t v = 0; v < nvars; ++v)
            if (g[0].e[v]) ++nz, at = int(v);
        if (nz == 0) return true;  // unit ideal
        if (nz == 1) seen[at] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace k3bv::gb
