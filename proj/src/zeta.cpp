#include "k3bv/zeta.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <boost/multiprecision/cpp_complex.hpp>

#include "upoly.hpp"

namespace k3bv {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

int64_t powmod(int64_t b, int64_t e, int64_t m) {
    __int128 r = 1, x = ((b % m) + m) % m;
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return int64_t(r);
}

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

int64_t primitive_root(int64_t p) {
    if (p == 2) return 1;
    auto fs = prime_factors(p - 1);
    for (int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto l : fs)
            if (powmod(g, (p - 1) / l, p) == 1) ok = false;
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

}  // namespace

int64_t multiplicative_order(int64_t a, int64_t m) {
    if (gcd64(a, m) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
    if (m == 1) return 1;
    int64_t x = ((a % m) + m) % m, k = 1;
    while (x != 1) {
        x = int64_t((__int128)x * a % m);
        ++k;
    }
    return k;
}

// ---- finite fields

FiniteField::FiniteField(int64_t p_, int64_t f_) : p(p_), f(f_) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: p is not prime");
    if (f < 1) throw std::invalid_argument("FiniteField: f < 1");
    q = 1;
    for (int64_t i = 0; i < f; ++i) {
        q *= p;
        if (q > (int64_t(1) << 24)) throw ZetaUnsupported("FiniteField: q too large for tables");
    }
    log_.assign(q, 0);
    exp_.assign(q - 1, 0);
    if (f == 1) {
        modulus = {0, 1};
        generator = primitive_root(p);
        int64_t x = 1;
        for (int64_t k = 0; k < q - 1; ++k) {
            exp_[k] = int32_t(x);
            log_[x] = int32_t(k);
            x = x * generator % p;
        }
        return;
    }
    // first monic polynomial, in base-p order, for which x has order q-1
    std::vector<int64_t> P(f + 1, 0);
    P[f] = 1;
    auto mulx = [&](std::vector<int64_t> &a) {  // a *= x mod P
        int64_t top = a[f - 1];
        for (int64_t i = f - 1; i > 0; --i) a[i] = a[i - 1];
        a[0] = 0;
        for (int64_t i = 0; i < f; ++i) a[i] = ((a[i] - top * P[i]) % p + p) % p;
    };
    auto code = [&](const std::vector<int64_t> &a) {
        int64_t c = 0;
        for (int64_t i = f - 1; i >= 0; --i) c = c * p + a[i];
        return c;
    };
    for (int64_t cand = 0; cand < q; ++cand) {
        int64_t c = cand;
        for (int64_t i = 0; i < f; ++i) {
            P[i] = c % p;
            c /= p;
        }
        if (P[0] == 0) continue;
        std::vector<int64_t> a(f, 0);
        a[0] = 1;
        std::fill(log_.begin(), log_.end(), -1);
        bool ok = true;
        for (int64_t k = 0; k < q - 1; ++k) {
            int64_t cd = code(a);
            if (log_[cd] != -1) {
                ok = false;
                break;
            }
            exp_[k] = int32_t(cd);
            log_[cd] = int32_t(k);
            mulx(a);
        }
        if (!ok || code(a) != 1) continue;
        modulus = P;
        generator = p;  // the class of x
        log_[0] = 0;
        return;
    }
    throw std::logic_error("FiniteField: no primitive polynomial found");
}

int64_t FiniteField::add(int64_t a, int64_t b) const {
    if (f == 1) {
        int64_t s = a + b;
        return s >= p ? s - p : s;
    }
    int64_t r = 0, pw = 1;
    for (int64_t i = 0; i < f; ++i) {
        int64_t d = (a % p + b % p) % p;
        r += d * pw;
        pw *= p;
        a /= p;
        b /= p;
    }
    return r;
}

int64_t FiniteField::neg(int64_t a) const {
    if (f == 1) return a == 0 ? 0 : p - a;
    int64_t r = 0, pw = 1;
    for (int64_t i = 0; i < f; ++i) {
        r += ((p - a % p) % p) * pw;
        pw *= p;
        a /= p;
    }
    return r;
}

int64_t FiniteField::mul(int64_t a, int64_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(int64_t(log_[a]) + log_[b]) % (q - 1)];
}

// ---- characters

Cyclo CharTable::value(int64_t x) const {
    if (((x % p) + p) % p == 0) return Cyclo(m);
    return Cyclo::zeta_pow(m, exponent(x));
}

CharTable char_structure(int64_t p, int m) {
    if (!is_prime(p)) throw std::invalid_argument("char_structure: p is not prime");
    if (m < 1) throw std::invalid_argument("char_structure: m < 1");
    if ((p - 1) % m != 0)
        throw ZetaUnsupported("char_structure: p = " + std::to_string(p) + " is not 1 mod " + std::to_string(m));
    CharTable t;
    t.p = p;
    t.m = m;
    t.generator = primitive_root(p);
    t.dlog.assign(p, 0);
    int64_t x = 1;
    for (int64_t k = 0; k < p - 1; ++k) {
        t.dlog[x] = int32_t(k);
        x = x * t.generator % p;
    }
    return t;
}

// ---- character vectors

void CharVector::validate() const {
    if (m < 2) throw std::invalid_argument("CharVector: m < 2");
    if (a.size() < 2) throw std::invalid_argument("CharVector: need at least two entries");
    int64_t s = 0;
    for (auto x : a) {
        if (((x % m) + m) % m == 0) throw std::invalid_argument("CharVector: zero entry in " + str());
        s += x;
    }
    if (((s % m) + m) % m != 0) throw std::invalid_argument("CharVector: entries of " + str() + " do not sum to 0 mod m");
}

int CharVector::length() const {
    int64_t s = 0;
    for (auto x : a) s += ((x % m) + m) % m;
    return int(s / m) - 1;
}

CharVector CharVector::times(int64_t t) const {
    CharVector r = *this;
    for (auto &x : r.a) x = (((x * t) % m) + m) % m;
    return r;
}

std::string CharVector::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ") mod " << m;
    return os.str();
}

Cyclo jacobi_sum(const FiniteField &F, const CharVector &av) {
    av.validate();
    const int m = av.m;
    if ((F.q - 1) % m != 0) throw ZetaUnsupported("jacobi_sum: q is not 1 mod m");
    const int n = av.n();
    std::vector<int64_t> a(av.a.size());
    for (size_t i = 0; i < a.size(); ++i) a[i] = ((av.a[i] % m) + m) % m;
    // chi(g^k) = zeta_m^k
    std::vector<int64_t> hist(m, 0);
    const int64_t one = 1;
    // v_1 .. v_n free, v_{n+1} = -(1 + sum)
    std::vector<int64_t> sum(n + 1, 0), ex(n + 1, 0);
    sum[0] = one;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            int64_t last = F.neg(sum[n]);
            if (last == 0) return;
            int64_t e = (ex[n] + a[n + 1] * (F.log(last) % m)) % m;
            ++hist[e];
            return;
        }
        for (int64_t v = 1; v < F.q; ++v) {
            sum[i + 1] = F.add(sum[i], v);
            ex[i + 1] = (ex[i] + a[i + 1] * (F.log(v) % m)) % m;
            rec(i + 1);
        }
    };
    rec(0);
    std::vector<BigInt> g(m);
    for (int k = 0; k < m; ++k) g[k] = (n % 2 ? -1 : 1) * hist[k];
    return Cyclo::from_group_ring(m, g);
}

Cyclo jacobi_sum(int64_t p, const CharVector &a) {
    a.validate();
    if ((p - 1) % a.m != 0)
        throw ZetaUnsupported("jacobi_sum: p = " + std::to_string(p) + " is not 1 mod " + std::to_string(a.m));
    return jacobi_sum(FiniteField(p, 1), a);
}

bool jacobi_absolute_value_ok(const Cyclo &j, int64_t q, int n, long double tol) {
    long double target = std::pow((long double)q, n / 2.0L);
    for (int64_t k = 1; k < j.m; ++k) {
        if (gcd64(k, j.m) != 1) continue;
        long double v = std::abs(j.embed(k));
        if (std::fabs(v / target - 1) > tol) return false;
    }
    if (j.m == 1) return std::fabs(std::abs(j.embed(0)) / target - 1) <= tol;
    return true;
}

std::vector<CharVector> character_vectors(int m, int n, const std::vector<int64_t> &steps) {
    const int N = n + 2;
    if (!steps.empty() && int(steps.size()) != N) throw std::invalid_argument("character_vectors: wrong number of weights");
    std::vector<int64_t> st(N, 1);
    for (int i = 0; i < N && !steps.empty(); ++i) st[i] = gcd64(steps[i], m);
    std::vector<CharVector> out;
    std::vector<int64_t> a(N, 0);
    std::function<void(int, int64_t)> rec = [&](int i, int64_t s) {
        if (i == N - 1) {
            int64_t last = ((-s) % m + m) % m;
            if (last == 0 || last % st[i]) return;
            a[i] = last;
            out.push_back(CharVector{m, a});
            return;
        }
        for (int64_t x = st[i]; x < m; x += st[i]) {
            a[i] = x;
            rec(i + 1, s + x);
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MotiveOrbit> enumerate_motives(int m, int n, const std::vector<int64_t> &weights) {
    if (m < 2) throw std::invalid_argument("enumerate_motives: m < 2");
    auto all = character_vectors(m, n, weights);
    std::set<CharVector> seen;
    std::vector<MotiveOrbit> out;
    for (auto &a : all) {
        if (seen.count(a)) continue;
        MotiveOrbit o;
        std::set<CharVector> orb;
        for (int64_t t = 1; t < m; ++t)
            if (gcd64(t, m) == 1) orb.insert(a.times(t));
        o.algebraic = n % 2 == 0;
        for (auto &b : orb) {
            seen.insert(b);
            o.orbit.push_back(b);
            int L = b.length();
            o.lengths.push_back(L);
            ++o.hodge[{L, n - L}];
            if (L * 2 != n) o.algebraic = false;
        }
        out.push_back(std::move(o));
    }
    return out;
}

// ---- point counts

int64_t count_points_bruteforce(const WPolynomial &F, int64_t p, int threads) {
    if (!is_prime(p)) throw std::invalid_argument("count_points_bruteforce: p is not prime");
    for (auto c : F.coefs)
        if (c % p == 0) throw std::invalid_argument("count_points_bruteforce: p divides a coefficient");
    const int N = int(F.nvars());
    const int K = int(F.nterms());
    long double size = std::pow((long double)p, N);
    if (size > 1e9L) throw ZetaUnsupported("count_points_bruteforce: p^n exceeds 10^9");
    // pw[i][k][x] = x^{e_ki} mod p
    std::vector<std::vector<std::vector<int64_t>>> pw(N, std::vector<std::vector<int64_t>>(K, std::vector<int64_t>(p)));
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < K; ++k)
            for (int64_t x = 0; x < p; ++x) pw[i][k][x] = powmod(x, F.exps[k][i], p);
    std::vector<int64_t> coef(K);
    for (int k = 0; k < K; ++k) coef[k] = ((F.coefs[k] % p) + p) % p;

    auto work = [&](int64_t x0) -> int64_t {
        // partial products per monomial at each depth
        std::vector<std::vector<int64_t>> part(N, std::vector<int64_t>(K));
        for (int k = 0; k < K; ++k) part[0][k] = coef[k] * pw[0][k][x0] % p;
        int64_t cnt = 0;
        std::vector<int64_t> x(N, 0);
        x[0] = x0;
        std::function<void(int)> rec = [&](int i) {
            if (i == N - 1) {
                for (int64_t v = 0; v < p; ++v) {
                    int64_t s = 0;
                    for (int k = 0; k < K; ++k) s += part[i - 1][k] * pw[i][k][v] % p;
                    if (s % p == 0) ++cnt;
                }
                return;
            }
            for (int64_t v = 0; v < p; ++v) {
                for (int k = 0; k < K; ++k) part[i][k] = part[i - 1][k] * pw[i][k][v] % p;
                rec(i + 1);
            }
        };
        if (N == 1) return std::accumulate(part[0].begin(), part[0].end(), int64_t(0)) % p == 0 ? 1 : 0;
        rec(1);
        return cnt;
    };
    unsigned nt = threads > 0 ? unsigned(threads) : std::max(1u, std::thread::hardware_concurrency());
    nt = std::min<unsigned>(nt, unsigned(p));
    std::atomic<int64_t> next{0};
    std::vector<int64_t> partial(nt, 0);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
            for (int64_t x0; (x0 = next.fetch_add(1)) < p;) partial[t] += work(x0);
        });
    for (auto &th : pool) th.join();
    int64_t total = std::accumulate(partial.begin(), partial.end(), int64_t(0));
    total -= 1;  // origin
    if (total % (p - 1) != 0) throw std::logic_error("count_points_bruteforce: cone count not divisible by p-1");
    return total / (p - 1);
}

namespace {

struct DiagonalData {
    std::vector<int64_t> d;  // exponent of variable i
    std::vector<int64_t> c;  // its coefficient
    int64_t m = 1;
};

DiagonalData diagonal_data(const WPolynomial &F) {
    if (!F.diagonal()) throw ZetaUnsupported("equation is not diagonal: " + F.str());
    DiagonalData D;
    const size_t N = F.nvars();
    D.d.assign(N, 0);
    D.c.assign(N, 0);
    for (size_t k = 0; k < F.nterms(); ++k)
        for (size_t i = 0; i < N; ++i)
            if (F.exps[k][i]) {
                D.d[i] = F.exps[k][i];
                D.c[i] = F.coefs[k];
            }
    for (auto x : D.d) D.m = lcm64(D.m, x);
    return D;
}

// embed Z[zeta_{m'}] into Z[zeta_m], zeta_{m'} = zeta_m^g
Cyclo lift(const Cyclo &x, int m) {
    int g = m / x.m;
    std::vector<BigInt> gr(m, 0);
    for (size_t i = 0; i < x.c.size(); ++i) gr[(int64_t(i) * g) % m] += x.c[i];
    return Cyclo::from_group_ring(m, gr);
}

using CPoly = std::vector<Cyclo>;  // polynomial in t over Z[zeta_m]

CPoly cmul(const CPoly &a, const CPoly &b, int m) {
    CPoly r(a.size() + b.size() - 1, Cyclo(m));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
}

std::vector<BigInt> pmul(const std::vector<BigInt> &a, const std::vector<BigInt> &b) {
    std::vector<BigInt> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// (1 - c t^s)^e
std::vector<BigInt> power_factor(const BigInt &c, int s, int64_t e) {
    std::vector<BigInt> base(s + 1, 0), r{1};
    base[0] = 1;
    base[s] = -c;
    for (int64_t i = 0; i < e; ++i) r = pmul(r, base);
    return r;
}

// ---- polynomials over F_p, constant term first

using ModPoly = std::vector<int64_t>;

void mtrim(ModPoly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mrem(ModPoly a, const ModPoly &b, int64_t p) {
    mtrim(a);
    int64_t inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        int64_t t = a.back() * inv % p;
        size_t sh = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[sh + j] = ((a[sh + j] - t * b[j]) % p + p) % p;
        mtrim(a);
    }
    return a;
}

ModPoly mquot(ModPoly a, const ModPoly &b, int64_t p) {
    mtrim(a);
    int64_t inv = powmod(b.back(), p - 2, p);
    ModPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
    while (a.size() >= b.size()) {
        int64_t t = a.back() * inv % p;
        size_t sh = a.size() - b.size();
        q[sh] = t;
        for (size_t j = 0; j < b.size(); ++j) a[sh + j] = ((a[sh + j] - t * b[j]) % p + p) % p;
        mtrim(a);
    }
    mtrim(q);
    return q;
}

ModPoly mgcd(ModPoly a, ModPoly b, int64_t p) {
    mtrim(a);
    mtrim(b);
    while (!b.empty()) {
        ModPoly r = mrem(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

ModPoly mmulmod(const ModPoly &a, const ModPoly &b, const ModPoly &h, int64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return mrem(r, h, p);
}

ModPoly mpow(ModPoly base, int64_t e, const ModPoly &h, int64_t p) {
    ModPoly r{1};
    base = mrem(base, h, p);
    while (e > 0) {
        if (e & 1) r = mmulmod(r, base, h, p);
        base = mmulmod(base, base, h, p);
        e >>= 1;
    }
    return r;
}

ModPoly reduce_mod(const std::vector<int64_t> &h, int64_t p) {
    ModPoly a(h.size());
    for (size_t i = 0; i < h.size(); ++i) a[i] = ((h[i] % p) + p) % p;
    mtrim(a);
    return a;
}

// lambda polynomial mod p, checked for good reduction
ModPoly edge_poly(const QuotientSingularity &s, int64_t p) {
    ModPoly h = reduce_mod(s.lambda_poly, p);
    if (h.size() != s.lambda_poly.size() || h[0] == 0)
        throw ZetaUnsupported("singular stratum has bad reduction at p = " + std::to_string(p));
    ModPoly dh(h.size() > 1 ? h.size() - 1 : 0);
    for (size_t i = 1; i < h.size(); ++i) dh[i - 1] = h[i] * int64_t(i) % p;
    mtrim(dh);
    if (h.size() > 1 && (dh.empty() || mgcd(h, dh, p).size() > 1))
        throw ZetaUnsupported("singular points collide mod p = " + std::to_string(p));
    return h;
}

// degrees of the irreducible factors of a squarefree h over F_p
std::vector<int> factor_degrees(ModPoly h, int64_t p) {
    std::vector<int> out;
    ModPoly X{0, 1};
    ModPoly xs = X;
    for (int s = 1; int(h.size()) - 1 >= 2 * s; ++s) {
        xs = mpow(xs, p, h, p);
        ModPoly d = xs;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] - 1 + p) % p;
        mtrim(d);
        ModPoly g = mgcd(h, d, p);
        int dg = int(g.size()) - 1;
        for (int i = 0; i < dg / s; ++i) out.push_back(s);
        if (dg > 0) {
            h = mquot(h, g, p);
            xs = mrem(xs, h, p);
        }
    }
    if (h.size() > 1) out.push_back(int(h.size()) - 1);
    return out;
}

}  // namespace

int64_t count_points_charsum(const WPolynomial &F, int64_t p) {
    DiagonalData D = diagonal_data(F);
    if (!is_prime(p)) throw std::invalid_argument("count_points_charsum: p is not prime");
    if ((p - 1) % D.m != 0)
        throw ZetaUnsupported("count_points_charsum: p = " + std::to_string(p) + " is not 1 mod " + std::to_string(D.m));
    for (auto c : D.c)
        if (c % p == 0) throw std::invalid_argument("count_points_charsum: p divides a coefficient");
    const int N = int(F.nvars()), n = N - 2;
    const int m = int(D.m);
    std::vector<int64_t> steps(N);
    for (int i = 0; i < N; ++i) steps[i] = D.m / D.d[i];
    FiniteField K(p, 1);
    Cyclo total(m);
    for (auto &a : character_vectors(m, n, steps)) {
        int64_t tw = 0;
        for (int i = 0; i < N; ++i) tw -= a.a[i] * K.log(K.from_int(D.c[i]));
        total += Cyclo::zeta_pow(m, tw) * jacobi_sum(K, a);
    }
    if (!total.is_integer()) throw std::logic_error("character sum is not rational: " + total.str());
    BigInt base = 0, pk = 1;
    for (int i = 0; i < N - 1; ++i) {
        base += pk;
        pk *= p;
    }
    BigInt r = base + (n % 2 ? -total.c[0] : total.c[0]);
    return r.convert_to<int64_t>();
}

int64_t rational_points(const QuotientSingularity &s, int64_t p) {
    if (s.vertex()) return 1;
    ModPoly h = edge_poly(s, p);
    int64_t cnt = 0;
    for (int64_t x = 1; x < p; ++x) {
        int64_t v = 0;
        for (size_t i = h.size(); i-- > 0;) v = (v * x + h[i]) % p;
        if (v == 0) ++cnt;
    }
    return cnt;
}

int64_t resolution_correction(const std::vector<QuotientSingularity> &sings, int64_t p) {
    int64_t d = 0;
    for (auto &s : sings) d += rational_points(s, p) * int64_t(s.chain.size()) * p;
    return d;
}

EulerFactor character_factor(const WPolynomial &F, int64_t p) {
    DiagonalData D = diagonal_data(F);
    if (!is_prime(p)) throw std::invalid_argument("character_factor: p is not prime");
    if (D.m % p == 0) throw ZetaUnsupported("character_factor: p divides the cover degree");
    for (auto c : D.c)
        if (c % p == 0) throw ZetaUnsupported("character_factor: p divides a coefficient");
    const int N = int(F.nvars()), n = N - 2;
    const int m = int(D.m);
    std::vector<int64_t> steps(N);
    for (int i = 0; i < N; ++i) steps[i] = D.m / D.d[i];
    auto all = character_vectors(m, n, steps);
    std::set<CharVector> done;
    std::map<int64_t, FiniteField> fields;
    CPoly P{Cyclo::integer(m, 1)};
    for (auto &a : all) {
        if (done.count(a)) continue;
        // Frobenius orbit a, pa, p^2 a, ..
        CharVector b = a;
        int f = 0;
        do {
            done.insert(b);
            b = b.times(p);
            ++f;
        } while (!(b == a));
        int64_t g = m;
        for (auto x : a.a) g = gcd64(g, x);
        CharVector red{int(m / g), {}};
        for (auto x : a.a) red.a.push_back(x / g);
        auto it = fields.find(f);
        if (it == fields.end()) it = fields.emplace(f, FiniteField(p, f)).first;
        const FiniteField &K = it->second;
        Cyclo j = lift(jacobi_sum(K, red), m);
        int64_t tw = 0;
        for (int i = 0; i < N; ++i) tw -= red.a[i] * (K.log(K.from_int(D.c[i])) % red.m);
        Cyclo alpha = lift(Cyclo::zeta_pow(red.m, tw), m) * j;
        CPoly fac(f + 1, Cyclo(m));
        fac[0] = Cyclo::integer(m, 1);
        fac[f] = -alpha;
        P = cmul(P, fac, m);
    }
    EulerFactor E;
    E.p = p;
    E.weight = n;
    E.coefficients.clear();
    for (auto &c : P) {
        if (!c.is_integer()) throw std::logic_error("character factor has a non-rational coefficient");
        E.coefficients.push_back(c.c[0]);
    }
    return E;
}

K3Factor k3_euler_factor(const WPolynomial &F, int64_t p) {
    if (F.nvars() != 4) throw std::invalid_argument("k3_euler_factor: need a surface in P^3(w)");
    if (F.degree != F.weight.sum()) throw std::invalid_argument("k3_euler_factor: degree is not the weight sum");
    if (F.degree % p == 0) throw ZetaUnsupported("k3_euler_factor: p divides the degree");
    K3Factor out;
    out.character = character_factor(F, p);
    auto sings = singular_loci(F);
    std::vector<BigInt> P{1, -BigInt(p)};  // hyperplane class
    for (auto &s : sings) {
        int64_t L = int64_t(s.chain.size());
        out.exceptional_rank += L * s.point_count;
        if (s.vertex()) {
            P = pmul(P, power_factor(p, 1, L));
            continue;
        }
        for (int deg : factor_degrees(edge_poly(s, p), p)) {
            BigInt ps = 1;
            for (int i = 0; i < deg; ++i) ps *= p;
            P = pmul(P, power_factor(ps, deg, L));
        }
    }
    P = pmul(P, out.character.coefficients);
    out.factor.p = p;
    out.factor.weight = 2;
    out.factor.coefficients = P;
    if (out.factor.degree() != 22)
        throw std::logic_error("k3_euler_factor: degree " + std::to_string(out.factor.degree()) + ", expected 22");

    if (std::pow((long double)p, 4) <= 2e8L) out.count_s0 = count_points_bruteforce(F, p);
    else out.count_s0 = count_points_charsum(F, p);
    out.delta = resolution_correction(sings, p);
    BigInt lhs = BigInt(out.count_s0) + out.delta;
    BigInt rhs = 1 - P[1] + BigInt(p) * p;
    if (lhs != rhs) {
        std::ostringstream os;
        os << "k3_euler_factor: trace identity fails at p = " << p << ": #S = " << lhs << ", 1 + trace + p^2 = " << rhs;
        throw std::logic_error(os.str());
    }
    return out;
}

// ---- Euler factors

std::string EulerFactor::to_json() const {
    std::ostringstream os;
    os << "{\"prime\": " << p << ", \"weight\": " << weight << ", \"coefficients\": [";
    for (size_t i = 0; i < coefficients.size(); ++i) os << (i ? ", " : "") << coefficients[i];
    os << "]}";
    return os.str();
}

EulerFactor rankin_selberg_convolve(const EulerFactor &f, const EulerFactor &g) {
    if (f.p != g.p) throw std::invalid_argument("rankin_selberg_convolve: primes differ");
    if (f.coefficients.empty() || f.coefficients[0] != 1 || g.coefficients.empty() || g.coefficients[0] != 1)
        throw std::invalid_argument("rankin_selberg_convolve: constant term must be 1");
    const int df = f.degree(), dg = g.degree();
    EulerFactor h;
    h.p = f.p;
    h.weight = f.weight + g.weight;
    if (df == 0 || dg == 0) return h;
    if (f.coefficients[df] == 0 || g.coefficients[dg] == 0)
        throw std::invalid_argument("rankin_selberg_convolve: zero reciprocal root");
    // reversed: F(x) = prod (x - alpha), G(x) = prod (x - beta)
    std::vector<BigInt> Fr(df + 1), Gr(dg + 1);
    for (int k = 0; k <= df; ++k) Fr[k] = f.coefficients[df - k];
    for (int k = 0; k <= dg; ++k) Gr[k] = g.coefficients[dg - k];
    const int D = df * dg;
    // H(x) = Res_y(F(y), y^dg G(x/y)) = prod (x - alpha beta), sampled at x = 0..D
    std::vector<Rational> xs, ys;
    for (int x = 0; x <= D; ++x) {
        // B(y) = sum_k G_k x^k y^(dg-k), leading first for Sylvester
        std::vector<BigInt> A(df + 1), B(dg + 1);
        for (int k = 0; k <= df; ++k) A[k] = Fr[df - k];
        BigInt xp = 1;
        for (int k = 0; k <= dg; ++k) {
            B[k] = Gr[k] * xp;  // coefficient of y^(dg-k)
            xp *= x;
        }
        const int S = df + dg;
        std::vector<std::vector<BigInt>> M(S, std::vector<BigInt>(S, 0));
        for (int r = 0; r < dg; ++r)
            for (int k = 0; k <= df; ++k) M[r][r + k] = A[k];
        for (int r = 0; r < df; ++r)
            for (int k = 0; k <= dg; ++k) M[dg + r][r + k] = B[k];
        xs.push_back(Rational(x));
        ys.push_back(Rational(int_det(M)));
    }
    // Newton interpolation
    std::vector<Rational> dd = ys;
    for (int j = 1; j <= D; ++j)
        for (int i = D; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    std::vector<Rational> H{dd[D]};
    for (int i = D - 1; i >= 0; --i) {
        std::vector<Rational> nh(H.size() + 1, Rational(0));
        for (size_t k = 0; k < H.size(); ++k) {
            nh[k + 1] += H[k];
            nh[k] -= H[k] * xs[i];
        }
        nh[0] += dd[i];
        H = nh;
    }
    if (int(H.size()) != D + 1 || H[D] != 1) throw std::logic_error("rankin_selberg_convolve: interpolation is not monic");
    h.coefficients.assign(D + 1, 0);
    for (int k = 0; k <= D; ++k) {
        if (denominator(H[D - k]) != 1) throw std::logic_error("rankin_selberg_convolve: non-integral coefficient");
        h.coefficients[k] = numerator(H[D - k]);
    }
    return h;
}

namespace {

using mpc = boost::multiprecision::cpp_complex_50;
using mpf = boost::multiprecision::cpp_bin_float_50;

// roots of a squarefree polynomial with rational coefficients, Aberth iteration
std::vector<mpc> aberth(const std::vector<Rational> &c) {
    const int d = int(c.size()) - 1;
    std::vector<mpc> a(d + 1);
    for (int i = 0; i <= d; ++i) a[i] = mpc(mpf(numerator(c[i])) / mpf(denominator(c[i])));
    if (d == 0) return {};
    auto eval = [&](const mpc &z, mpc &v, mpc &dv) {
        v = a[d];
        dv = 0;
        for (int i = d - 1; i >= 0; --i) {
            dv = dv * z + v;
            v = v * z + a[i];
        }
    };
    mpf rad = pow(abs(a[0] / a[d]), mpf(1) / d);
    if (rad == 0) rad = 1;
    std::vector<mpc> z(d);
    const mpf pi = boost::math::constants::pi<mpf>();
    for (int k = 0; k < d; ++k) {
        mpf th = 2 * pi * k / d + mpf(0.4);
        z[k] = mpc(rad * cos(th), rad * sin(th));
    }
    const mpf eps("1e-30");
    for (int it = 0; it < 500; ++it) {
        mpf worst = 0;
        for (int k = 0; k < d; ++k) {
            mpc v, dv;
            eval(z[k], v, dv);
            if (abs(v) == 0) continue;
            mpc ratio = v / dv;
            mpc s = 0;
            for (int j = 0; j < d; ++j)
                if (j != k) s += mpc(1) / (z[k] - z[j]);
            mpc w = ratio / (mpc(1) - ratio * s);
            z[k] -= w;
            mpf rel = abs(w) / (abs(z[k]) + mpf(1e-30));
            if (rel > worst) worst = rel;
        }
        if (worst < eps) break;
    }
    return z;
}

std::vector<Rational> rdiv(std::vector<Rational> a, const std::vector<Rational> &b) {
    upoly::trim(a);
    int db = int(b.size()) - 1;
    if (int(a.size()) - 1 < db) return {Rational(0)};
    std::vector<Rational> q(a.size() - db, Rational(0));
    for (int i = int(a.size()) - 1; i >= db; --i) {
        Rational t = a[i] / b[db];
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
    }
    return q;
}

}  // namespace

std::vector<std::complex<long double>> reciprocal_roots(const EulerFactor &f) {
    // reciprocal roots are the roots of the reversed polynomial
    std::vector<Rational> P(f.coefficients.rbegin(), f.coefficients.rend());
    upoly::trim(P);
    while (!P.empty() && P[0] == 0) P.erase(P.begin());  // zero roots are not reciprocal roots
    std::vector<std::complex<long double>> out;
    // Yun's squarefree decomposition
    int mult = 1;
    auto g = upoly::gcd(P, upoly::derivative(P));
    auto c = rdiv(P, g), dd = rdiv(upoly::derivative(P), g);
    while (c.size() > 1) {
        auto dc = upoly::derivative(c);
        std::vector<Rational> y = dd;
        y.resize(std::max(y.size(), dc.size()), Rational(0));
        for (size_t i = 0; i < dc.size(); ++i) y[i] -= dc[i];
        upoly::trim(y);
        auto a = y.empty() ? c : upoly::gcd(c, y);
        for (auto &z : aberth(a))
            for (int k = 0; k < mult; ++k)
                out.emplace_back(z.real().convert_to<long double>(), z.imag().convert_to<long double>());
        c = rdiv(c, a);
        dd = y.empty() ? std::vector<Rational>{Rational(0)} : rdiv(y, a);
        ++mult;
    }
    return out;
}

bool weil_ok(const EulerFactor &f, long double tol) {
    long double target = std::pow((long double)f.p, f.weight / 2.0L);
    auto roots = reciprocal_roots(f);
    if (int(roots.size()) != f.degree()) return false;
    for (auto &z : roots)
        if (std::fabs(std::abs(z) / target - 1) > tol) return false;
    return true;
}

// ---- elliptic curves

namespace {

int legendre(int64_t a, int64_t p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace

int64_t ap_elliptic(const EllipticCurve &E, int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("ap_elliptic: p is not prime");
    int64_t count = 0;  // projective points
    switch (E.model) {
        case EllipticModel::E2:
        case EllipticModel::E3: {
            if (p == 2 || (E.model == EllipticModel::E3 && p == 3))
                throw std::invalid_argument("ap_elliptic: bad reduction at p = " + std::to_string(p));
            // y0^2 = y1^4 + y2^4 in P(2,1,1), y0^2 = y1^3 + y2^6 in P(3,2,1)
            int64_t cone = 0;
            for (int64_t y1 = 0; y1 < p; ++y1)
                for (int64_t y2 = 0; y2 < p; ++y2) {
                    int64_t v = E.model == EllipticModel::E2 ? powmod(y1, 4, p) + powmod(y2, 4, p)
                                                             : powmod(y1, 3, p) + powmod(y2, 6, p);
                    cone += 1 + legendre(v, p);
                }
            cone -= 1;
            if (cone % (p - 1)) throw std::logic_error("ap_elliptic: cone count not divisible by p-1");
            count = cone / (p - 1);
            break;
        }
        case EllipticModel::Weierstrass: {
            BigInt disc = 4 * BigInt(E.A) * E.A * E.A + 27 * BigInt(E.B) * E.B;
            if (p == 2 || disc % p == 0)
                throw std::invalid_argument("ap_elliptic: bad reduction at p = " + std::to_string(p));
            count = 1;
            for (int64_t x = 0; x < p; ++x) {
                int64_t v = (powmod(x, 3, p) + (E.A % p + p) % p * x + E.B) % p;
                count += 1 + legendre(v, p);
            }
            break;
        }
    }
    int64_t ap = p + 1 - count;
    if ((long double)ap * ap > 4.0L * p) throw std::logic_error("ap_elliptic: Hasse bound violated");
    return ap;
}

EulerFactor elliptic_factor(const EllipticCurve &E, int64_t p) {
    EulerFactor f;
    f.p = p;
    f.weight = 1;
    f.coefficients = {1, -BigInt(ap_elliptic(E, p)), BigInt(p)};
    return f;
}

}  // namespace k3bv
