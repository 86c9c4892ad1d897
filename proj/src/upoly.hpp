#pragma once

#include <vector>

#include "k3bv/wps.hpp"

namespace k3bv::upoly {

// dense univariate polynomials over Q, constant term first
using RPoly = std::vector<Rational>;

void trim(RPoly &a);
RPoly derivative(const RPoly &a);
RPoly rem(RPoly a, const RPoly &b);
RPoly gcd(RPoly a, RPoly b);
// distinct roots in the algebraic closure, zero excluded if the constant term is nonzero
int distinct_roots(const std::vector<int64_t> &coefs);
bool squarefree(const std::vector<int64_t> &coefs);

}  // namespace k3bv::upoly
