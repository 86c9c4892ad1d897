#include "k3bv/singular.hpp"

#include <algorithm>
#include <numeric>

#include "k3bv/quasismooth.hpp"
#include "upoly.hpp"

namespace k3bv {

int64_t mod_inverse(int64_t a, int64_t n) {
    a %= n;
    if (a < 0) a += n;
    int64_t t = 0, nt = 1, r = n, nr = a;
    while (nr) {
        int64_t qq = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - qq * nt);
        std::tie(r, nr) = std::make_pair(nr, r - qq * nr);
    }
    if (r != 1) throw std::invalid_argument("not invertible modulo " + std::to_string(n));
    return t < 0 ? t + n : t;
}

HJExpansion hj_expand(int64_t n, int64_t q) {
    if (!(n > q && q >= 1)) throw std::invalid_argument("need n > q >= 1");
    if (std::gcd(n, q) != 1) throw std::invalid_argument("n and q must be coprime");
    HJExpansion h{n, q, {}};
    int64_t a = n, b = q;
    while (b > 0) {
        int64_t c = (a + b - 1) / b;  // ceil
        h.digits.push_back(c);
        int64_t r = c * b - a;
        a = b;
        b = r;
    }
    return h;
}

Rational hj_evaluate(const std::vector<int64_t> &digits) {
    if (digits.empty()) throw std::invalid_argument("empty expansion");
    Rational v = digits.back();
    for (size_t i = digits.size() - 1; i-- > 0;) v = Rational(digits[i]) - 1 / v;
    return v;
}

std::string QuotientSingularity::type() const {
    return "A_{" + std::to_string(n) + "," + std::to_string(q) + "}";
}

std::string QuotientSingularity::shorthand() const {
    if (q == n - 1) return "A_" + std::to_string(n - 1);
    return type();
}

namespace {

bool has_pure_power(const WPolynomial &F, int j) {
    for (auto &e : F.exps) {
        bool pure = e[j] > 0;
        for (size_t v = 0; v < e.size() && pure; ++v)
            if (int(v) != j && e[v]) pure = false;
        if (pure) return true;
    }
    return false;
}

// variables e such that x_j^a x_e is a monomial of F
std::vector<int> eliminable(const WPolynomial &F, int j) {
    std::vector<int> out;
    for (auto &ex : F.exps) {
        if (ex[j] == 0) continue;
        int other = -1, cnt = 0;
        for (size_t v = 0; v < ex.size(); ++v)
            if (int(v) != j && ex[v]) other = int(v), cnt += ex[v];
        if (cnt == 1) out.push_back(other);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int64_t local_q(const Weight &w, int k, int m, int64_t n) {
    int64_t a = ((w[k] % n) + n) % n, b = ((w[m] % n) + n) % n;
    if (std::gcd(a, n) != 1 || std::gcd(b, n) != 1)
        throw NotQuasiSmooth("non-isolated quotient singularity");
    return a * mod_inverse(b, n) % n;
}

void fill_chain(QuotientSingularity &s) {
    auto h = hj_expand(s.n, s.q);
    for (auto b : h.digits) s.chain.push_back(-b);
}

}  // namespace

std::vector<int64_t> vertex_type_choices(const WPolynomial &F, int j) {
    std::vector<int64_t> out;
    int64_t n = F.weight[j];
    for (int e : eliminable(F, j)) {
        std::vector<int> rest;
        for (int v = 0; v < int(F.nvars()); ++v)
            if (v != j && v != e) rest.push_back(v);
        int64_t q = local_q(F.weight, rest[0], rest[1], n);
        out.push_back(std::min(q, mod_inverse(q, n)));
    }
    return out;
}

std::vector<QuotientSingularity> singular_loci(const WPolynomial &F) {
    if (F.nvars() != 4) throw std::invalid_argument("singular loci are implemented for surfaces in P^3");
    if (!quasismooth_exact(F)) throw NotQuasiSmooth("hypersurface is not quasi-smooth");
    const Weight &w = F.weight;
    std::vector<QuotientSingularity> out;
    for (int j = 0; j < 4; ++j) {
        if (w[j] == 1 || has_pure_power(F, j)) continue;
        auto el = eliminable(F, j);
        if (el.empty()) throw NotQuasiSmooth("vertex without an eliminable variable");
        QuotientSingularity s;
        s.support = {j};
        for (int v = 0; v < 4; ++v)
            if (v != j) s.vanishing.push_back(v);
        std::vector<int> rest;
        for (int v = 0; v < 4; ++v)
            if (v != j && v != el[0]) rest.push_back(v);
        s.n = w[j];
        s.q = local_q(w, rest[0], rest[1], s.n);
        s.local_coords = {rest[0], rest[1]};
        s.point_count = 1;
        fill_chain(s);
        out.push_back(s);
    }
    for (int j = 0; j < 4; ++j)
        for (int l = j + 1; l < 4; ++l) {
            int64_t d = std::gcd(w[j], w[l]);
            if (d < 2) continue;
            QuotientSingularity s;
            s.support = {j, l};
            for (int v = 0; v < 4; ++v)
                if (v != j && v != l) s.vanishing.push_back(v);
            for (size_t k = 0; k < F.nterms(); ++k) {
                auto &e = F.exps[k];
                if (e[s.vanishing[0]] || e[s.vanishing[1]]) continue;
                s.residual_coefs.push_back(F.coefs[k]);
                s.residual_exps.push_back(e);
            }
            if (s.residual_exps.empty()) throw NotQuasiSmooth("a singular edge lies on the surface");
            int a0 = s.residual_exps[0][j];
            for (auto &e : s.residual_exps) a0 = std::min(a0, e[j]);
            int64_t step = w[l] / d;
            int top = 0;
            for (auto &e : s.residual_exps) top = std::max<int>(top, int((e[j] - a0) / step));
            s.lambda_poly.assign(top + 1, 0);
            for (size_t k = 0; k < s.residual_exps.size(); ++k) {
                int de = s.residual_exps[k][j] - a0;
                if (de % step) throw std::logic_error("edge residual is not a polynomial in lambda");
                s.lambda_poly[de / step] += s.residual_coefs[k];
            }
            while (s.lambda_poly.size() > 1 && s.lambda_poly.back() == 0) s.lambda_poly.pop_back();
            if (!upoly::squarefree(s.lambda_poly)) throw NotQuasiSmooth("repeated point on a singular edge");
            s.point_count = upoly::distinct_roots(s.lambda_poly);
            if (s.point_count == 0) continue;
            s.n = d;
            s.q = local_q(w, s.vanishing[0], s.vanishing[1], d);
            s.local_coords = {s.vanishing[0], s.vanishing[1]};
            fill_chain(s);
            out.push_back(s);
        }
    return out;
}

int64_t exceptional_rank(const std::vector<QuotientSingularity> &sings) {
    int64_t r = 0;
    for (auto &s : sings) r += s.point_count * int64_t(s.chain.size());
    return r;
}

int64_t exceptional_rank(const WPolynomial &F) { return exceptional_rank(singular_loci(F)); }

}  // namespace k3bv
