#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3bv/wps.hpp"

namespace k3bv {

// shapes of the set of monomials containing one variable x_i
enum class Form {
    pure_power,     // x_i^n
    power_times,    // x_i^n x_j
    power_plus,     // x_i^n + x_i x_j^m
    twisted_pair,   // x_i^n x_k + x_i x_j^m
    other,
    absent,
};

const char *form_name(Form f);

struct QuasiSmoothVerdict {
    bool combinatorial_pass = false;
    std::optional<bool> exact_pass;
    std::vector<std::pair<int64_t, bool>> probe_results;
    std::vector<Form> forms;
    std::string diagnostic;
};

QuasiSmoothVerdict combinatorial_form_check(const WPolynomial &F);

// exact over Q: the Jacobian ideal is zero-dimensional (Groebner basis test)
bool quasismooth_exact(const WPolynomial &F);

struct SearchTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exhaustive search for a nonzero F_p point where F and all partials vanish
bool quasismooth_fp_probe(const WPolynomial &F, int64_t p);

QuasiSmoothVerdict quasismooth_full(const WPolynomial &F, const std::vector<int64_t> &primes = {7, 11, 13, 17});

}  // namespace k3bv
