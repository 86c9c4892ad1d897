#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "k3bv/cyclo.hpp"
#include "k3bv/singular.hpp"
#include "k3bv/wps.hpp"

namespace k3bv {

struct ZetaUnsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// F_q, q = p^f, elements coded as base-p digit strings 0..q-1; digit 0 is the constant term
struct FiniteField {
    int64_t p = 0, f = 1, q = 0;
    std::vector<int64_t> modulus;  // monic, degree f, constant term first
    int64_t generator = 0;
    std::vector<int32_t> log_;  // log_[0] unused
    std::vector<int32_t> exp_;  // exp_[k] = g^k, k < q-1

    FiniteField(int64_t p, int64_t f = 1);

    int64_t add(int64_t a, int64_t b) const;
    int64_t neg(int64_t a) const;
    int64_t mul(int64_t a, int64_t b) const;
    int64_t log(int64_t a) const { return log_[a]; }
    // embeds c in F_p
    int64_t from_int(int64_t c) const { return ((c % p) + p) % p; }
};

// character of exact order m on F_q^*, chi(g) = zeta_m for the field's generator
struct CharTable {
    int64_t p = 0;
    int m = 0;
    int64_t generator = 0;
    std::vector<int32_t> dlog;  // index in F_p, dlog[0] unused

    // zeta exponent of chi(x), x != 0
    int64_t exponent(int64_t x) const { return dlog[((x % p) + p) % p] % m; }
    Cyclo value(int64_t x) const;  // chi(0) = 0
};

// split primes only: p = 1 (mod m)
CharTable char_structure(int64_t p, int m);

bool is_prime(int64_t n);
int64_t multiplicative_order(int64_t a, int64_t m);

// a = (a_0, .., a_{n+1}) mod m
struct CharVector {
    int m = 0;
    std::vector<int64_t> a;

    int n() const { return int(a.size()) - 2; }
    void validate() const;  // all nonzero, sum = 0 mod m
    int length() const;     // sum of representatives in 1..m-1, over m, minus 1
    CharVector times(int64_t t) const;
    bool operator<(const CharVector &o) const { return a < o.a; }
    bool operator==(const CharVector &o) const { return m == o.m && a == o.a; }
    std::string str() const;
};

// j(a) = (-1)^n sum over 1 + v_1 + .. + v_{n+1} = 0 of prod chi(v_i)^{a_i}, in Z[zeta_m]
Cyclo jacobi_sum(int64_t p, const CharVector &a);
// same over an extension field with q = 1 (mod m)
Cyclo jacobi_sum(const FiniteField &F, const CharVector &a);

// |j| = q^{n/2} under every embedding, relative tolerance tol
bool jacobi_absolute_value_ok(const Cyclo &j, int64_t q, int n, long double tol = 1e-9L);

struct MotiveOrbit {
    std::vector<CharVector> orbit;
    std::vector<int> lengths;
    std::map<std::pair<int, int>, int> hodge;  // (i, n-i) -> count
    bool algebraic = false;
};

// weights: a_i restricted to w_i Z/m
std::vector<MotiveOrbit> enumerate_motives(int m, int n, const std::vector<int64_t> &weights = {});
std::vector<CharVector> character_vectors(int m, int n, const std::vector<int64_t> &steps = {});

int64_t count_points_bruteforce(const WPolynomial &F, int64_t p, int threads = 0);
int64_t count_points_charsum(const WPolynomial &F, int64_t p);

// #S - #S_0 over F_p for the minimal resolution
int64_t resolution_correction(const std::vector<QuotientSingularity> &sings, int64_t p);
// number of F_p-rational points in a singular stratum
int64_t rational_points(const QuotientSingularity &s, int64_t p);

struct EulerFactor {
    int64_t p = 0;
    std::vector<BigInt> coefficients{1};  // constant term first
    int weight = 0;

    int degree() const { return int(coefficients.size()) - 1; }
    std::string to_json() const;
};

// reciprocal roots, multiplicities repeated
std::vector<std::complex<long double>> reciprocal_roots(const EulerFactor &f);
// all reciprocal roots of absolute value p^{weight/2}
bool weil_ok(const EulerFactor &f, long double tol = 1e-9L);

// product over the character part of a diagonal surface or curve: prod (1 - twist j t^f)
EulerFactor character_factor(const WPolynomial &F, int64_t p);

struct K3Factor {
    EulerFactor factor;
    EulerFactor character;  // product over all character vectors, algebraic ones included
    int64_t exceptional_rank = 0;
    int64_t count_s0 = 0;
    int64_t delta = 0;
};

// degree 22 factor of the resolved diagonal surface; throws if the trace identity fails
K3Factor k3_euler_factor(const WPolynomial &F, int64_t p);

EulerFactor rankin_selberg_convolve(const EulerFactor &f, const EulerFactor &g);

enum class EllipticModel { E2, E3, Weierstrass };

struct EllipticCurve {
    EllipticModel model = EllipticModel::E2;
    int64_t A = 0, B = 0;  // y^2 = x^3 + A x + B
};

int64_t ap_elliptic(const EllipticCurve &E, int64_t p);
EulerFactor elliptic_factor(const EllipticCurve &E, int64_t p);

}  // namespace k3bv
