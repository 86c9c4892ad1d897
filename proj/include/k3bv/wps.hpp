#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace k3bv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Exponent = std::vector<int>;

struct Weight {
    std::vector<int64_t> w;

    Weight() = default;
    Weight(std::initializer_list<int64_t> l) : w(l) {}
    explicit Weight(std::vector<int64_t> v) : w(std::move(v)) {}

    size_t size() const { return w.size(); }
    int ambient_dim() const { return int(w.size()) - 1; }
    int64_t operator[](size_t i) const { return w[i]; }
    int64_t sum() const;
    // gcd of every subset that omits one entry is 1
    bool normalized() const;
    bool operator==(const Weight &o) const { return w == o.w; }
    std::string str() const;
};

struct WPolynomial {
    Weight weight;
    std::vector<int64_t> coefs;
    std::vector<Exponent> exps;
    int64_t degree = 0;

    WPolynomial() = default;
    // validates degrees, nonzero coefficients and distinct rows; throws std::invalid_argument
    WPolynomial(Weight w, std::vector<int64_t> c, std::vector<Exponent> e, int64_t d);
    // same, with the degree taken from the first monomial
    WPolynomial(Weight w, std::vector<int64_t> c, std::vector<Exponent> e);

    size_t nvars() const { return weight.size(); }
    size_t nterms() const { return exps.size(); }
    bool delsarte() const { return exps.size() == weight.size(); }
    bool diagonal() const;
    std::string str(const std::string &names = "") const;
};

// one row of the golden data; equation degree equals the weight sum
struct K3Record {
    int id = 0;
    std::optional<int> borcea_id;
    Weight weight;
    std::optional<WPolynomial> equation;
    std::optional<int> involution_variable;
    std::optional<int> expected_r, expected_a;
    int source_table = 0;
    std::vector<int> mirror_ids;
    std::string removed_terms;
    std::optional<int> also_table;
};

int64_t weighted_degree(const Weight &w, const Exponent &e);

Weight normalize_weight(const Weight &w);

// all exponent vectors of weighted degree d, in descending lexicographic order
std::vector<Exponent> monomials_of_degree(const Weight &w, int64_t d);

struct CurveModel {
    Weight weight;
    WPolynomial f;
    int64_t degree;
};

struct NonReducible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// normalizes a plane curve's weight, substituting exponents along the way
CurveModel reduce_curve_model(const Weight &w3, const WPolynomial &f);

struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix exponent_matrix(const WPolynomial &F);
RatMatrix rat_inverse(const RatMatrix &A);  // throws NotInvertible
BigInt int_det(std::vector<std::vector<BigInt>> A);

struct Transposed {
    WPolynomial poly;
    Weight weight;
};
Transposed transpose_exponents(const WPolynomial &F);

int64_t fermat_cover_degree(const WPolynomial &F);

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);

}  // namespace k3bv
