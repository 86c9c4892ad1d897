#pragma once

#include <string>

#include "k3bv/nikulin.hpp"
#include "k3bv/wps.hpp"

namespace k3bv {

struct BVHodge {
    int h11 = 0, h21 = 0;
    int euler = 0;
    int r = 0, a = 0, g = 0, k = 0;
    int N() const { return k + 1; }
    int Nprime() const { return g; }
};

struct InconsistentHodge : std::logic_error {
    using std::logic_error::logic_error;
};

BVHodge hodge_numbers(int r, int a);
BVHodge hodge_from_fixed(int g, int k);
// untwisted sector plus four copies of the fixed curves
BVHodge orbifold_hodge(int g, int k, int r);
// same from the fixed curves themselves (N curves of total genus N'), so types II and III work too
BVHodge orbifold_hodge(const FixedLocusReport &rep, int r);

enum class Curve { E2, E3 };
const char *curve_name(Curve c);

struct TwistModel {
    Weight weight5;
    WPolynomial equation;
    int64_t degree = 0;
    Curve curve = Curve::E2;
    bool quasi_smooth = true;
    std::string note;
};

struct TwistUnsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// F is x0^2 = f or x0^2 x_i + f with the involution on x0
TwistModel twist_model(const WPolynomial &F, Curve c);
// hand-made models for surfaces whose involution is not on x0, by dataset id
TwistModel special_twist_model(int id);
bool has_special_twist_model(int id);

struct NoMirror : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<BVHodge, BVHodge> mirror_hodge_check(const NikulinInvariants &t);

}  // namespace k3bv
