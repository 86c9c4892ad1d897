#include "k3bv/nikulin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "k3bv/involutions.hpp"
#include "k3bv/quasismooth.hpp"
#include "upoly.hpp"

namespace k3bv {

namespace {

// the reduced curve written in the surface's variable names
std::string curve_str(const WPolynomial &f, const std::vector<int> &vars) {
    std::string out;
    for (size_t k = 0; k < f.nterms(); ++k) {
        int64_t c = f.coefs[k];
        if (k) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        if (std::abs(c) != 1) out += std::to_string(std::abs(c)) + "*";
        std::string mono;
        for (size_t j = 0; j < 3; ++j) {
            if (!f.exps[k][j]) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(vars[j]);
            if (f.exps[k][j] > 1) mono += "^" + std::to_string(f.exps[k][j]);
        }
        out += mono.empty() ? "1" : mono;
    }
    return out;
}


int v2(int64_t x) {
    int v = 0;
    while (x % 2 == 0) x /= 2, ++v;
    return v;
}

int64_t frac_floor(const Rational &x) {
    BigInt n = boost::multiprecision::numerator(x), d = boost::multiprecision::denominator(x);
    BigInt q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return static_cast<int64_t>(q);
}

Rational frac(const Rational &x) { return x - frac_floor(x); }

bool is_integer(const Rational &x) { return boost::multiprecision::denominator(x) == 1; }

struct Curve {
    int genus;
    std::string provenance;
    std::string detail;
    std::string key;
};

std::string vars_key(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    std::string s;
    for (int x : v) s += "x" + std::to_string(x) + "=";
    return s + "0";
}

// components of S_0 cut by {x_m = 0}
std::vector<Curve> section_components(const WPolynomial &F, int m) {
    std::vector<int> vars;
    for (int v = 0; v < int(F.nvars()); ++v)
        if (v != m) vars.push_back(v);
    std::vector<int64_t> coefs;
    std::vector<Exponent> exps;
    for (size_t k = 0; k < F.nterms(); ++k)
        if (F.exps[k][m] == 0) {
            coefs.push_back(F.coefs[k]);
            exps.push_back(F.exps[k]);
        }
    if (exps.empty()) throw NotQuasiSmooth("a coordinate plane lies on the surface");
    std::vector<Curve> out;
    // monomial factors give coordinate lines
    for (int v : vars) {
        int mn = exps[0][v];
        for (auto &e : exps) mn = std::min(mn, e[v]);
        if (mn == 0) continue;
        for (auto &e : exps) e[v] -= mn;
        out.push_back({0, "coordinate-stratum", "line " + vars_key({m, v}), vars_key({m, v})});
    }
    std::vector<int> present;
    for (int v : vars) {
        bool any = false;
        for (auto &e : exps) any = any || e[v] > 0;
        if (any) present.push_back(v);
    }
    if (present.size() <= 1) {
        if (exps.size() != 1) throw std::logic_error("inconsistent section residual");
        return out;
    }
    const Weight &w = F.weight;
    if (present.size() == 2) {
        // lines through the vertex of the absent variable, one per root of h(lambda)
        int a = present[0], b = present[1];
        int64_t d = std::gcd(w[a], w[b]);
        int64_t step = w[b] / d;
        int top = 0;
        for (auto &e : exps) top = std::max<int>(top, int(e[a] / step));
        std::vector<int64_t> h(top + 1, 0);
        for (size_t k = 0; k < exps.size(); ++k) {
            if (exps[k][a] % step) throw std::logic_error("section residual is not a polynomial in lambda");
            h[exps[k][a] / step] += coefs[k];
        }
        int roots = upoly::distinct_roots(h);
        for (int r = 0; r < roots; ++r)
            out.push_back({0, "coordinate-section",
                           "line in {x" + std::to_string(m) + "=0} through P" +
                               std::to_string(vars[0] + vars[1] + vars[2] - a - b) + " (root " +
                               std::to_string(r + 1) + ")",
                           "cone:" + std::to_string(m) + ":" + std::to_string(a) + std::to_string(b) + ":" +
                               std::to_string(r)});
        return out;
    }
    Weight w3({w[vars[0]], w[vars[1]], w[vars[2]]});
    std::vector<Exponent> e3;
    for (auto &e : exps) e3.push_back({e[vars[0]], e[vars[1]], e[vars[2]]});
    WPolynomial G(w3, coefs, e3);
    CurveModel cm = reduce_curve_model(w3, G);
    if (!quasismooth_exact(cm.f))
        throw NotQuasiSmooth("section curve {x" + std::to_string(m) + "=0} is not quasi-smooth");
    int64_t g = fixed_curve_genus(cm.weight, cm.f);
    out.push_back({int(g), "coordinate-section",
                   "curve {x" + std::to_string(m) + "=0}: " + curve_str(cm.f, vars) + " in P" + cm.weight.str(),
                   "section:" + std::to_string(m)});
    return out;
}

// phi with t = exp(2 pi i phi) matching sigma on the support; nullopt if none
std::optional<Rational> lift_phase(const Weight &w, const std::vector<int> &support, int i) {
    int64_t N = 2;
    for (int s : support) N *= w[s];
    for (int64_t k = 0; k < N; ++k) {
        bool ok = true;
        for (int s : support) {
            // w_s * k / N must be 1/2 (negated) or 0 modulo 1
            int64_t num = (w[s] * k) % N;
            int64_t want = s == i ? N / 2 : 0;
            if (num != want) {
                ok = false;
                break;
            }
        }
        if (ok) return Rational(k, N);
    }
    return std::nullopt;
}

struct Ray {
    int64_t x, y;  // scaled by n
};

// rays of the minimal resolution of C^2/mu_n with weights (a, b), from e1 to e2
std::vector<Ray> resolution_rays(int64_t n, int64_t a, int64_t b) {
    std::vector<Ray> pts;
    pts.push_back({n, 0});
    for (int64_t t = 1; t < n; ++t) pts.push_back({(t * a) % n, (t * b) % n});
    pts.push_back({0, n});
    std::sort(pts.begin(), pts.end(), [](const Ray &p, const Ray &q) { return p.x != q.x ? p.x > q.x : p.y < q.y; });
    std::vector<Ray> ch;
    auto cross = [](const Ray &o, const Ray &p, const Ray &q) {
        return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
    };
    for (auto &p : pts) {
        while (ch.size() >= 2 && cross(ch[ch.size() - 2], ch.back(), p) > 0) ch.pop_back();
        ch.push_back(p);
    }
    return ch;
}

}  // namespace

void validate(const NikulinInvariants &t) {
    if ((t.r - t.a) % 2) throw std::invalid_argument("r and a must have the same parity");
    if (t.r < 1 || t.r > 20 || t.a < 0 || t.a > 11) throw std::invalid_argument("(r, a) out of range");
    if (22 - t.r - t.a < 0 || t.r - t.a < 0)
        if (!(t.r == 10 && (t.a == 10 || t.a == 8))) throw std::invalid_argument("(r, a) is not realizable");
}

int64_t fixed_curve_genus(const Weight &w3, const WPolynomial &f) {
    if (w3.size() != 3) throw std::invalid_argument("genus formula needs a plane curve");
    Rational d = f.degree;
    Rational w1 = w3[0], w2 = w3[1], w3_ = w3[2];
    Rational t = d * d / (w1 * w2 * w3_);
    Rational s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) s += Rational(std::gcd(w3[i], w3[j])) / (Rational(w3[i]) * w3[j]);
    Rational u = 0;
    for (int i = 0; i < 3; ++i) u += Rational(std::gcd(f.degree, w3[i]), w3[i]);
    Rational g = (t - d * s + u - 1) / 2;
    if (!is_integer(g) || g < 0)
        throw std::domain_error("genus formula is not a non-negative integer; model not normalized or not quasi-smooth");
    return static_cast<int64_t>(boost::multiprecision::numerator(g));
}

FixedLocusReport fixed_locus(const WPolynomial &F, int i) { return fixed_locus(F, i, singular_loci(F)); }

FixedLocusReport fixed_locus(const WPolynomial &F, int i, const std::vector<QuotientSingularity> &sings) {
    if (F.nvars() != 4) throw std::invalid_argument("fixed locus is implemented for surfaces in P^3");
    if (classify_involution(F, i) != InvolutionClass::non_symplectic)
        throw std::invalid_argument("involution is symplectic");
    const Weight &w = F.weight;
    std::vector<Curve> curves;
    auto add = [&](const std::vector<Curve> &cs) {
        for (auto &c : cs)
            if (std::none_of(curves.begin(), curves.end(), [&](const Curve &d) { return d.key == c.key; }))
                curves.push_back(c);
    };
    add(section_components(F, i));
    std::vector<int> L;
    for (int l = 0; l < 4; ++l)
        if (l != i && v2(w[l]) > v2(w[i])) L.push_back(l);
    if (L.size() == 3) throw std::invalid_argument("involution acts trivially on the weighted space");
    if (L.size() == 2) {
        int m = 6 - i - L[0] - L[1];
        add(section_components(F, m));
    } else if (L.size() == 1) {
        std::vector<int> van;
        for (int v = 0; v < 4; ++v)
            if (v != i && v != L[0]) van.push_back(v);
        bool on = true;
        for (auto &e : F.exps) on = on && (e[van[0]] > 0 || e[van[1]] > 0);
        if (on) add({{0, "coordinate-stratum", "line " + vars_key(van), vars_key(van)}});
    }

    FixedLocusReport rep;
    for (auto &s : sings) {
        ExceptionalAction ex;
        ex.sing = s;
        bool neg_in = std::find(s.support.begin(), s.support.end(), i) != s.support.end();
        ex.label = std::string(s.vertex() ? "vertex-" : "edge-") +
                   (neg_in ? (s.vertex() ? "negated" : "off-section") : "on-fixed-section");
        auto phi = lift_phase(w, s.support, i);
        if (!phi) {
            ex.swapped = true;
            rep.exceptional.push_back(ex);
            continue;
        }
        int k = s.local_coords.first, m = s.local_coords.second;
        Rational th_k = frac(*phi * w[k] + (k == i ? Rational(1, 2) : Rational(0)));
        Rational th_m = frac(*phi * w[m] + (m == i ? Rational(1, 2) : Rational(0)));
        int64_t n = s.n, a = ((w[k] % n) + n) % n, b = ((w[m] % n) + n) % n;
        auto rays = resolution_rays(n, a, b);
        if (rays.size() != s.chain.size() + 2) throw std::logic_error("resolution rays disagree with the chain");
        for (size_t r = 1; r + 1 < rays.size(); ++r) {
            int64_t mx = rays[r].y, my = -rays[r].x;
            int64_t g = std::gcd(std::abs(mx), std::abs(my));
            mx /= g, my /= g;
            int64_t pair = ((a * mx + b * my) % n + n) % n;
            int64_t c = n / std::gcd(n, pair);
            Rational val = Rational(c) * (Rational(mx) * th_k + Rational(my) * th_m);
            if (is_integer(val)) ex.fixed_indices.push_back(int(r));
        }
        for (int64_t p = 0; p < s.point_count; ++p)
            for (int idx : ex.fixed_indices) {
                std::string key = "exc:" + vars_key(s.vanishing) + ":" + std::to_string(p) + ":" + std::to_string(idx);
                curves.push_back({0, "exceptional-divisor",
                                  ex.label + " " + s.shorthand() + " E" + std::to_string(idx), key});
            }
        rep.exceptional.push_back(ex);
    }

    int positive = 0, rational = 0;
    for (auto &c : curves) (c.genus > 0 ? positive : rational)++;
    std::stable_sort(curves.begin(), curves.end(), [](const Curve &x, const Curve &y) { return x.genus > y.genus; });
    for (auto &c : curves) rep.components.push_back({c.genus, c.provenance, c.detail});
    if (positive == 0) {
        if (rational == 0) {
            rep.type = FixedType::II;
        } else {
            rep.g = 0;
            rep.k = rational - 1;
        }
    } else if (positive == 1) {
        rep.g = curves[0].genus;
        rep.k = rational;
    } else if (positive == 2 && rational == 0 && curves[0].genus == 1 && curves[1].genus == 1) {
        rep.type = FixedType::III;
        rep.g = 1;
    } else {
        throw std::logic_error("fixed locus has an impossible shape");
    }
    return rep;
}

NikulinInvariants nikulin_invariants(int g, int k) {
    NikulinInvariants t{11 - g + k, 11 - g - k, std::nullopt};
    if (t.a < 0) throw std::domain_error("negative a: impossible fixed locus");
    validate(t);
    return t;
}

NikulinInvariants nikulin_invariants(const FixedLocusReport &rep) {
    if (rep.type == FixedType::II) return {10, 10, 0};
    if (rep.type == FixedType::III) return {10, 8, 0};
    return nikulin_invariants(rep.g, rep.k);
}

bool borcea_form(const WPolynomial &F) {
    if (F.nvars() != 4) return false;
    bool square = false;
    for (auto &e : F.exps) {
        if (e == Exponent{2, 0, 0, 0}) square = true;
        else if (e[0]) return false;
    }
    return square;
}

int64_t r_closed_formula(const WPolynomial &F) {
    if (!borcea_form(F)) throw Unsupported("closed formula needs an equation x0^2 = f(x1,x2,x3)");
    const Weight &w = F.weight;
    int64_t rq = exceptional_rank(F);
    if (w[0] % 2) {
        for (int i = 1; i < 4; ++i)
            if (w[i] % 2 && std::gcd(w[0], w[i]) >= 2) return rq - w[i] + 2;
        return rq + 1;
    }
    Rational r = rq + 1;
    for (int i = 1; i < 4; ++i) {
        int64_t d = std::gcd(w[0], w[i]);
        r -= Rational(d - 1) * (Rational(2 * d, w[i]) - 1);
    }
    if (!is_integer(r)) throw std::domain_error("closed formula produced a fraction");
    return static_cast<int64_t>(boost::multiprecision::numerator(r));
}

bool in_pale_region(int r, int a, int delta) {
    static const std::set<std::tuple<int, int, int>> pale = {{20, 2, 1}, {19, 3, 1}, {18, 4, 1}, {18, 4, 0},
                                                            {17, 5, 1}, {16, 6, 1}, {15, 7, 1}, {14, 8, 1},
                                                            {13, 9, 1}, {12, 10, 1}};
    return pale.count({r, a, delta}) > 0;
}

MirrorResult mirror_triplet(const NikulinInvariants &t) {
    validate(t);
    auto blocked = [&](int d) {
        if (in_pale_region(t.r, t.a, d)) return std::string("pale region");
        if (t.r == 14 && t.a == 6 && d == 0) return std::string("(14,6,0) has no mirror partner");
        return std::string();
    };
    MirrorResult res;
    NikulinInvariants m{20 - t.r, t.a, t.delta};
    if (t.delta) {
        res.reason = blocked(*t.delta);
        if (res.reason.empty()) res.mirror = m;
        return res;
    }
    std::string b0 = blocked(0), b1 = blocked(1);
    if (!b0.empty() && !b1.empty()) {
        res.reason = b0 + " for delta=0; " + b1 + " for delta=1";
        return res;
    }
    res.mirror = m;
    if (!b0.empty() || !b1.empty()) {
        res.conditional = true;
        res.reason = b0.empty() ? b1 + " if delta=1" : b0 + " if delta=0";
    }
    return res;
}

bool lattice_a_check(const std::vector<std::vector<int64_t>> &gram, int a) {
    std::vector<std::vector<BigInt>> M;
    for (auto &row : gram) {
        if (row.size() != gram.size()) throw std::invalid_argument("gram matrix must be square");
        M.emplace_back(row.begin(), row.end());
    }
    BigInt d = abs(int_det(M));
    return d == (BigInt(1) << a);
}

bool AtlasEntry::matches() const {
    return computed && expected && computed->r == expected->r && computed->a == expected->a;
}

AtlasResult triplet_atlas(const std::vector<K3Record> &records, const std::vector<K3Record> &alternatives) {
    AtlasResult res;
    std::set<std::pair<int, int>> seen;
    auto run = [&](const K3Record &rec, const std::string &src) {
        if (!rec.equation || !rec.involution_variable) return;
        AtlasEntry e;
        e.id = rec.id;
        e.variable = *rec.involution_variable;
        e.source = src;
        if (rec.expected_r && rec.expected_a) e.expected = NikulinInvariants{*rec.expected_r, *rec.expected_a, {}};
        try {
            e.computed = nikulin_invariants(fixed_locus(*rec.equation, e.variable));
            seen.insert({e.computed->r, e.computed->a});
        } catch (const std::exception &ex) {
            e.error = ex.what();
        }
        if (!e.matches()) res.discrepancies.push_back(e);
        res.entries.push_back(e);
    };
    for (auto &r : records) run(r, "table " + std::to_string(r.source_table));
    for (auto &r : alternatives) run(r, "alternative");
    res.pairs.assign(seen.begin(), seen.end());
    return res;
}

std::vector<std::pair<int, int>> published_triplet_array() {
    static const std::map<int, std::vector<int>> tab = {
        {1, {1}},        {2, {0, 2}},    {3, {1}},       {6, {2, 4}},       {7, {3, 7}},          {8, {6, 8}},
        {9, {1, 9}},     {10, {0, 2, 4, 6, 8}},          {11, {1, 9}},      {12, {6, 8}},         {13, {3, 5, 9}},
        {14, {2, 4, 6}}, {15, {5, 7}},   {16, {2, 6}},   {17, {1, 3, 5}},   {18, {0, 2, 4}},      {19, {1, 3}},
        {20, {2}}};
    std::vector<std::pair<int, int>> out;
    for (auto &[r, as] : tab)
        for (int a : as) out.push_back({r, a});
    return out;
}

}  // namespace k3bv
