#include "k3bv/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace k3bv {

int euler_phi(int64_t m) {
    int64_t r = m;
    for (int64_t p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            r -= r / p;
        }
    if (m > 1) r -= r / m;
    return int(r);
}

namespace {

using Poly = std::vector<BigInt>;

Poly poly_div_exact(Poly a, const Poly &b) {
    // b monic
    int db = int(b.size()) - 1;
    Poly q(a.size() - db, 0);
    for (int i = int(a.size()) - 1; i >= db; --i) {
        BigInt t = a[i];
        q[i - db] = t;
        if (t != 0)
            for (int j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
    }
    return q;
}

// reduce in place modulo the monic cyclotomic polynomial
void reduce(Poly &a, const Poly &phi) {
    int d = int(phi.size()) - 1;
    for (int i = int(a.size()) - 1; i >= d; --i) {
        if (a[i] == 0) continue;
        BigInt t = a[i];
        for (int j = 0; j <= d; ++j) a[i - d + j] -= t * phi[j];
    }
    a.resize(d);
}

}  // namespace

const std::vector<BigInt> &cyclotomic_poly(int m) {
    static std::map<int, Poly> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw std::invalid_argument("cyclotomic_poly: m < 1");
    Poly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d) continue;
        p = poly_div_exact(p, cyclotomic_poly(d));
    }
    return cache.emplace(m, p).first->second;
}

Cyclo::Cyclo(int m_) : m(m_), c(euler_phi(m_)) {}

Cyclo Cyclo::integer(int m, const BigInt &v) {
    Cyclo r(m);
    r.c[0] = v;
    return r;
}

Cyclo Cyclo::from_group_ring(int m, const std::vector<BigInt> &g) {
    Poly a(g);
    if (int(a.size()) < m) a.resize(m, 0);
    const Poly &phi = cyclotomic_poly(m);
    reduce(a, phi);
    Cyclo r(m);
    r.c = a;
    return r;
}

Cyclo Cyclo::zeta_pow(int m, int64_t k) {
    std::vector<BigInt> g(m, 0);
    g[((k % m) + m) % m] = 1;
    return from_group_ring(m, g);
}

Cyclo Cyclo::operator+(const Cyclo &o) const {
    if (m != o.m) throw std::invalid_argument("cyclotomic moduli differ");
    Cyclo r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

Cyclo Cyclo::operator-(const Cyclo &o) const { return *this + (-o); }

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto &x : r.c) x = -x;
    return r;
}

Cyclo Cyclo::operator*(const Cyclo &o) const {
    if (m != o.m) throw std::invalid_argument("cyclotomic moduli differ");
    Poly a(c.size() + o.c.size(), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) a[i + j] += c[i] * o.c[j];
    }
    reduce(a, cyclotomic_poly(m));
    Cyclo r(m);
    r.c = a;
    return r;
}

Cyclo Cyclo::operator*(const BigInt &k) const {
    Cyclo r = *this;
    for (auto &x : r.c) x *= k;
    return r;
}

bool Cyclo::is_integer() const {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

bool Cyclo::is_zero() const {
    for (auto &x : c)
        if (x != 0) return false;
    return true;
}

Cyclo Cyclo::galois(int64_t t) const {
    if (gcd64(t, m) != 1) throw std::invalid_argument("galois: t not a unit mod m");
    std::vector<BigInt> g(m, 0);
    int64_t tt = ((t % m) + m) % m;
    for (size_t i = 0; i < c.size(); ++i) g[(int64_t(i) * tt) % m] += c[i];
    return from_group_ring(m, g);
}

std::complex<long double> Cyclo::embed(int64_t k) const {
    const long double th = 2 * std::numbers::pi_v<long double> * (long double)k / m;
    std::complex<long double> s = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        long double ang = th * (long double)i;
        s += c[i].convert_to<long double>() * std::complex<long double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

std::string Cyclo::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) os << (c[i] > 0 ? " + " : " - ");
        else if (c[i] < 0) os << "-";
        BigInt a = c[i] < 0 ? BigInt(-c[i]) : c[i];
        if (i == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace k3bv
