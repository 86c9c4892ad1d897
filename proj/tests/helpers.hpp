#pragma once
// small builders shared by the unit tests

#include <map>
#include <numeric>
#include <vector>

#include "k3bv/atlas.hpp"
#include "k3bv/wps.hpp"

namespace th {

using namespace k3bv;

inline WPolynomial poly(Weight w, std::vector<int64_t> c, std::vector<Exponent> e) {
    return WPolynomial(std::move(w), std::move(c), std::move(e));
}

// sum of x_i^{e_i} with coefficients c
inline WPolynomial diag(Weight w, std::vector<int64_t> c, std::vector<int> e) {
    std::vector<Exponent> rows;
    for (size_t i = 0; i < e.size(); ++i) {
        Exponent r(e.size(), 0);
        r[i] = e[i];
        rows.push_back(r);
    }
    return WPolynomial(std::move(w), std::move(c), rows);
}

inline const Dataset &data() {
    static Dataset d = load_dataset();
    return d;
}

inline const WPolynomial &eq(int id) { return *data().by_id(id).equation; }

// naive evaluation mod p
inline int64_t eval_mod(const WPolynomial &F, const std::vector<int64_t> &x, int64_t p) {
    int64_t s = 0;
    for (size_t t = 0; t < F.nterms(); ++t) {
        int64_t m = ((F.coefs[t] % p) + p) % p;
        for (size_t i = 0; i < x.size(); ++i)
            for (int k = 0; k < F.exps[t][i]; ++k) m = m * x[i] % p;
        s = (s + m) % p;
    }
    return s;
}

}  // namespace th
