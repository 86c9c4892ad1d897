#pragma once

#include <complex>
#include <string>
#include <vector>

#include "k3bv/wps.hpp"

namespace k3bv {

// element of Z[zeta_m], power basis 1, z, .., z^(phi(m)-1)
struct Cyclo {
    int m = 1;
    std::vector<BigInt> c;

    Cyclo() : c(1) {}
    explicit Cyclo(int m_);  // zero
    static Cyclo integer(int m, const BigInt &v);
    static Cyclo zeta_pow(int m, int64_t k);
    // sum g[k] z^k over k = 0..m-1
    static Cyclo from_group_ring(int m, const std::vector<BigInt> &g);

    Cyclo operator+(const Cyclo &o) const;
    Cyclo operator-(const Cyclo &o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo &o) const;
    Cyclo operator*(const BigInt &k) const;
    Cyclo &operator+=(const Cyclo &o) { return *this = *this + o; }
    Cyclo &operator*=(const Cyclo &o) { return *this = *this * o; }
    bool operator==(const Cyclo &o) const { return m == o.m && c == o.c; }

    bool is_integer() const;
    bool is_zero() const;
    // z -> z^t, gcd(t, m) = 1
    Cyclo galois(int64_t t) const;
    // value at exp(2 pi i k / m)
    std::complex<long double> embed(int64_t k) const;
    std::string str() const;
};

int euler_phi(int64_t m);
// coefficients of the m-th cyclotomic polynomial, constant term first
const std::vector<BigInt> &cyclotomic_poly(int m);

}  // namespace k3bv
