#include "k3bv/involutions.hpp"

#include <algorithm>

#include "k3bv/quasismooth.hpp"

namespace k3bv {

const char *class_name(InvolutionClass c) {
    return c == InvolutionClass::non_symplectic ? "non-symplectic" : "symplectic";
}

std::optional<int> semi_invariant_sign(const WPolynomial &F, size_t i) {
    if (i >= F.nvars()) throw std::out_of_range("variable index out of range");
    bool even = true, odd = true;
    for (auto &e : F.exps) {
        if (e[i] % 2) even = false;
        else odd = false;
    }
    if (even) return 1;
    if (odd) return -1;
    return std::nullopt;
}

InvolutionClass classify_involution(const WPolynomial &F, size_t i) {
    auto s = semi_invariant_sign(F, i);
    if (!s) throw NotAnAutomorphism("x" + std::to_string(i) + " -> -x" + std::to_string(i) +
                                    " does not preserve the hypersurface");
    return *s == 1 ? InvolutionClass::non_symplectic : InvolutionClass::symplectic;
}

std::vector<InvolutionCandidate> delsarte_search(const Weight &w) {
    std::vector<InvolutionCandidate> out;
    size_t n = w.size();
    auto mons = monomials_of_degree(w, w.sum());
    size_t M = mons.size();
    // a quasi-smooth equation needs x_i^a or x_i^a x_j for every i
    auto covers = [&](const Exponent &e, size_t i) {
        if (e[i] == 0) return false;
        int others = 0, deg_others = 0;
        for (size_t v = 0; v < n; ++v)
            if (v != i && e[v]) ++others, deg_others += e[v];
        return others == 0 || (others == 1 && deg_others == 1);
    };
    std::vector<size_t> idx(4);
    for (idx[0] = 0; idx[0] < M; ++idx[0])
        for (idx[1] = idx[0] + 1; idx[1] < M; ++idx[1])
            for (idx[2] = idx[1] + 1; idx[2] < M; ++idx[2])
                for (idx[3] = idx[2] + 1; idx[3] < M; ++idx[3]) {
                    bool ok = true;
                    for (size_t i = 0; i < n && ok; ++i) {
                        bool c = false;
                        for (auto k : idx) c = c || covers(mons[k], i);
                        ok = c;
                    }
                    if (!ok) continue;
                    std::vector<Exponent> rows;
                    for (auto k : idx) rows.push_back(mons[k]);
                    WPolynomial F(w, std::vector<int64_t>(4, 1), rows, w.sum());
                    std::vector<int> vars;
                    for (size_t i = 0; i < n; ++i) {
                        auto s = semi_invariant_sign(F, i);
                        if (s && *s == 1) vars.push_back(int(i));
                    }
                    if (vars.empty()) continue;
                    if (!quasismooth_exact(F)) continue;
                    for (int i : vars)
                        out.push_back({F, i, 1, classify_involution(F, i)});
                }
    return out;
}

}  // namespace k3bv
