#pragma once

#include <vector>

#include "k3bv/wps.hpp"

namespace k3bv::gb {

struct Term {
    Exponent e;
    Rational c;
};

// terms sorted descending in the weighted reverse-lex order
using Poly = std::vector<Term>;

struct Order {
    std::vector<int64_t> w;
    // true if a > b
    bool greater(const Exponent &a, const Exponent &b) const;
};

Poly make_poly(const Order &o, std::vector<Term> terms);
Poly partial(const Order &o, const WPolynomial &F, size_t i);

struct TooBig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// reduced Groebner basis; throws TooBig when the basis passes max_size
std::vector<Poly> groebner(const Order &o, std::vector<Poly> gens, size_t max_size = 400);

// zero-dimensional iff every variable has a pure power among leading monomials
bool zero_dimensional(const std::vector<Poly> &basis, size_t nvars);

}  // namespace k3bv::gb
