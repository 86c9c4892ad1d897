#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3bv/wps.hpp"

namespace k3bv {

struct HJExpansion {
    int64_t n = 0, q = 0;
    std::vector<int64_t> digits;
};

HJExpansion hj_expand(int64_t n, int64_t q);
Rational hj_evaluate(const std::vector<int64_t> &digits);

struct QuotientSingularity {
    std::vector<int> support;    // coordinates that are nonzero on the stratum
    std::vector<int> vanishing;  // coordinates that vanish
    // F restricted to the stratum (edges only), as full-length exponent rows
    std::vector<int64_t> residual_coefs;
    std::vector<Exponent> residual_exps;
    // residual as a polynomial in lambda = x_j^(w_l/d) / x_l^(w_j/d), constant term first
    std::vector<int64_t> lambda_poly;
    int64_t point_count = 1;
    int64_t n = 1, q = 0;  // mu_n acting by (zeta^q, zeta) on local_coords
    std::pair<int, int> local_coords{-1, -1};
    std::vector<int64_t> chain;  // self-intersections of E_1 .. E_r, E_1 meeting {first local coord = 0}

    bool vertex() const { return support.size() == 1; }
    std::string type() const;  // "A_{n,q}"
    std::string shorthand() const;  // "A_{n-1}" when q = n-1
};

struct NotQuasiSmooth : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<QuotientSingularity> singular_loci(const WPolynomial &F);
int64_t exceptional_rank(const WPolynomial &F);
int64_t exceptional_rank(const std::vector<QuotientSingularity> &sings);

// every choice of eliminable variable at vertex j, as normalized q values
std::vector<int64_t> vertex_type_choices(const WPolynomial &F, int j);

int64_t mod_inverse(int64_t a, int64_t n);

}  // namespace k3bv
