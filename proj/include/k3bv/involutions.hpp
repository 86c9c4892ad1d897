#pragma once

#include <optional>
#include <vector>

#include "k3bv/wps.hpp"

namespace k3bv {

enum class InvolutionClass { non_symplectic, symplectic };

const char *class_name(InvolutionClass c);

struct InvolutionCandidate {
    WPolynomial equation;
    int variable_index = 0;
    int semi_invariance_sign = 1;
    InvolutionClass classification = InvolutionClass::non_symplectic;
};

// +1: every exponent of x_i even; -1: every exponent odd; nullopt otherwise
std::optional<int> semi_invariant_sign(const WPolynomial &F, size_t i);

struct NotAnAutomorphism : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x_i -> -x_i multiplies the residue form by -sign, since the ambient volume form flips
InvolutionClass classify_involution(const WPolynomial &F, size_t i);

// all 4-monomial quasi-smooth equations of degree sum(w) with a non-symplectic coordinate involution
std::vector<InvolutionCandidate> delsarte_search(const Weight &w);

}  // namespace k3bv
