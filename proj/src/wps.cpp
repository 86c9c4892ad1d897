#include "k3bv/wps.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace k3bv {

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }
int64_t lcm64(int64_t a, int64_t b) { return std::lcm(a, b); }

int64_t Weight::sum() const { return std::accumulate(w.begin(), w.end(), int64_t(0)); }

bool Weight::normalized() const {
    if (w.size() < 2) return true;
    for (size_t j = 0; j < w.size(); ++j) {
        int64_t g = 0;
        for (size_t l = 0; l < w.size(); ++l)
            if (l != j) g = std::gcd(g, w[l]);
        if (g != 1) return false;
    }
    return true;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

int64_t weighted_degree(const Weight &w, const Exponent &e) {
    if (e.size() != w.size()) throw std::invalid_argument("exponent length does not match weight");
    int64_t d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += int64_t(e[i]) * w[i];
    return d;
}

WPolynomial::WPolynomial(Weight w, std::vector<int64_t> c, std::vector<Exponent> e, int64_t d)
    : weight(std::move(w)), coefs(std::move(c)), exps(std::move(e)), degree(d) {
    if (coefs.size() != exps.size()) throw std::invalid_argument("coefficient/exponent count mismatch");
    for (auto x : weight.w)
        if (x < 1) throw std::invalid_argument("weights must be positive");
    std::set<Exponent> seen;
    for (size_t k = 0; k < exps.size(); ++k) {
        if (coefs[k] == 0) throw std::invalid_argument("zero coefficient");
        for (int a : exps[k])
            if (a < 0) throw std::invalid_argument("negative exponent");
        if (weighted_degree(weight, exps[k]) != degree)
            throw std::invalid_argument("monomial " + std::to_string(k) + " is not of degree " +
                                        std::to_string(degree));
        if (!seen.insert(exps[k]).second) throw std::invalid_argument("repeated monomial");
    }
}

static int64_t first_degree(const Weight &w, const std::vector<Exponent> &e) {
    if (e.empty()) throw std::invalid_argument("empty polynomial");
    return weighted_degree(w, e[0]);
}

WPolynomial::WPolynomial(Weight w, std::vector<int64_t> c, std::vector<Exponent> e)
    : WPolynomial(w, std::move(c), e, first_degree(w, e)) {}

bool WPolynomial::diagonal() const {
    if (!delsarte()) return false;
    std::vector<int> hit(nvars(), 0);
    for (auto &e : exps) {
        int nz = 0, at = -1;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) ++nz, at = int(i);
        if (nz != 1) return false;
        hit[at]++;
    }
    return std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
}

std::string WPolynomial::str(const std::string &names) const {
    std::ostringstream os;
    for (size_t k = 0; k < exps.size(); ++k) {
        int64_t c = coefs[k];
        if (k) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (std::abs(c) != 1) os << std::abs(c) << "*";
        bool any = false;
        for (size_t i = 0; i < exps[k].size(); ++i) {
            if (!exps[k][i]) continue;
            if (any) os << "*";
            if (names.size() == exps[k].size()) os << names[i];
            else os << "x" << i;
            if (exps[k][i] > 1) os << "^" << exps[k][i];
            any = true;
        }
        if (!any) os << "1";
    }
    return os.str();
}

// largest divisor of g sharing no prime with w
static int64_t coprime_part(int64_t g, int64_t w) {
    int64_t c;
    while ((c = std::gcd(g, w)) > 1) g /= c;
    return g;
}

Weight normalize_weight(const Weight &in) {
    for (auto x : in.w)
        if (x < 1) throw std::invalid_argument("weights must be positive");
    std::vector<int64_t> w = in.w;
    if (w.empty()) return in;
    int64_t g = 0;
    for (auto x : w) g = std::gcd(g, x);
    for (auto &x : w) x /= g;
    if (w.size() < 2) return Weight(w);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t j = 0; j < w.size(); ++j) {
            int64_t h = 0;
            for (size_t l = 0; l < w.size(); ++l)
                if (l != j) h = std::gcd(h, w[l]);
            int64_t d = coprime_part(h, w[j]);
            if (d > 1) {
                for (size_t l = 0; l < w.size(); ++l)
                    if (l != j) w[l] /= d;
                changed = true;
            }
        }
    }
    return Weight(w);
}

static void enum_rec(const Weight &w, size_t i, int64_t left, Exponent &cur, std::vector<Exponent> &out) {
    if (i + 1 == w.size()) {
        if (left % w[i] == 0) {
            cur[i] = int(left / w[i]);
            out.push_back(cur);
        }
        return;
    }
    for (int64_t a = left / w[i]; a >= 0; --a) {
        cur[i] = int(a);
        enum_rec(w, i + 1, left - a * w[i], cur, out);
    }
}

std::vector<Exponent> monomials_of_degree(const Weight &w, int64_t d) {
    std::vector<Exponent> out;
    if (w.size() == 0 || d < 0) return out;
    for (auto x : w.w)
        if (x < 1) throw std::invalid_argument("weights must be positive");
    Exponent cur(w.size(), 0);
    enum_rec(w, 0, d, cur, out);
    return out;
}

CurveModel reduce_curve_model(const Weight &w3, const WPolynomial &f) {
    if (w3.size() != 3) throw std::invalid_argument("curve model needs three weights");
    std::vector<int64_t> w = w3.w;
    std::vector<Exponent> exps = f.exps;
    int64_t deg = f.degree;
    int64_t g = std::gcd(std::gcd(w[0], w[1]), w[2]);
    if (deg % g) throw NonReducible("degree not divisible by common weight factor");
    for (auto &x : w) x /= g;
    deg /= g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t j = 0; j < 3; ++j) {
            int64_t h = 0;
            for (size_t l = 0; l < 3; ++l)
                if (l != j) h = std::gcd(h, w[l]);
            int64_t d = coprime_part(h, w[j]);
            if (d <= 1) continue;
            for (auto &e : exps) {
                if (e[j] % d)
                    throw NonReducible("monomial exponent " + std::to_string(e[j]) + " of x" + std::to_string(j) +
                                       " not divisible by " + std::to_string(d));
                e[j] /= int(d);
            }
            for (size_t l = 0; l < 3; ++l)
                if (l != j) w[l] /= d;
            deg /= d;
            changed = true;
        }
    }
    Weight nw(w);
    return {nw, WPolynomial(nw, f.coefs, exps, deg), deg};
}

RatMatrix exponent_matrix(const WPolynomial &F) {
    RatMatrix A(F.nterms(), std::vector<Rational>(F.nvars()));
    for (size_t r = 0; r < F.nterms(); ++r)
        for (size_t c = 0; c < F.nvars(); ++c) A[r][c] = F.exps[r][c];
    return A;
}

RatMatrix rat_inverse(const RatMatrix &M) {
    size_t n = M.size();
    for (auto &row : M)
        if (row.size() != n) throw NotInvertible("matrix is not square");
    RatMatrix A = M, I(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && A[p][c] == 0) ++p;
        if (p == n) throw NotInvertible("exponent matrix is singular");
        std::swap(A[p], A[c]);
        std::swap(I[p], I[c]);
        Rational inv = 1 / A[c][c];
        for (size_t k = 0; k < n; ++k) A[c][k] *= inv, I[c][k] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || A[r][c] == 0) continue;
            Rational f = A[r][c];
            for (size_t k = 0; k < n; ++k) A[r][k] -= f * A[c][k], I[r][k] -= f * I[c][k];
        }
    }
    return I;
}

// fraction-free Bareiss elimination
BigInt int_det(std::vector<std::vector<BigInt>> A) {
    size_t n = A.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && A[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(A[p], A[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
        prev = A[k][k];
    }
    return sign * A[n - 1][n - 1];
}

Transposed transpose_exponents(const WPolynomial &F) {
    size_t n = F.nvars();
    if (F.nterms() != n) throw NotInvertible("transpose needs a square exponent matrix");
    RatMatrix A = exponent_matrix(F);
    RatMatrix At(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) At[i][j] = A[j][i];
    RatMatrix inv = rat_inverse(At);
    // A^T q = 1, then clear denominators
    std::vector<Rational> q(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) q[i] += inv[i][j];
    BigInt L = 1;
    for (auto &x : q) {
        if (x <= 0) throw NotInvertible("transposed weight is not positive");
        L = boost::multiprecision::lcm(L, BigInt(boost::multiprecision::denominator(x)));
    }
    std::vector<BigInt> qi(n);
    BigInt G = 0;
    for (size_t i = 0; i < n; ++i) {
        Rational v = q[i] * Rational(L);
        qi[i] = boost::multiprecision::numerator(v);
        G = boost::multiprecision::gcd(G, qi[i]);
    }
    std::vector<int64_t> wt(n);
    for (size_t i = 0; i < n; ++i) wt[i] = static_cast<int64_t>(qi[i] / G);
    std::vector<Exponent> rows(n, Exponent(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) rows[r][c] = F.exps[c][r];
    Weight W(wt);
    return {WPolynomial(W, std::vector<int64_t>(n, 1), rows), W};
}

int64_t fermat_cover_degree(const WPolynomial &F) {
    RatMatrix inv = rat_inverse(exponent_matrix(F));
    BigInt L = 1;
    for (auto &row : inv)
        for (auto &x : row) L = boost::multiprecision::lcm(L, BigInt(boost::multiprecision::denominator(x)));
    return static_cast<int64_t>(L);
}

}  // namespace k3bv
