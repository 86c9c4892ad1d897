#include "k3bv/quasismooth.hpp"

#include <sstream>

#include "groebner.hpp"

namespace k3bv {

const char *form_name(Form f) {
    switch (f) {
    case Form::pure_power: return "x_i^n";
    case Form::power_times: return "x_i^n*x_j";
    case Form::power_plus: return "x_i^n+x_i*x_j^m";
    case Form::twisted_pair: return "x_i^n*x_k+x_i*x_j^m";
    case Form::other: return "other";
    case Form::absent: return "absent";
    }
    return "?";
}

namespace {

// support of a monomial other than i; returns -2 if more than one other variable
int other_var(const Exponent &e, size_t i) {
    int at = -1;
    for (size_t v = 0; v < e.size(); ++v) {
        if (v == i || !e[v]) continue;
        if (at >= 0) return -2;
        at = int(v);
    }
    return at;
}

bool is_pure(const Exponent &e, size_t i) { return e[i] >= 1 && other_var(e, i) == -1; }
bool is_power_times(const Exponent &e, size_t i) {
    int j = other_var(e, i);
    return e[i] >= 1 && j >= 0 && e[j] == 1;
}
bool is_linear_in(const Exponent &e, size_t i) {
    int j = other_var(e, i);
    return e[i] == 1 && j >= 0;
}

Form classify(const WPolynomial &F, size_t i) {
    std::vector<const Exponent *> M;
    for (auto &e : F.exps)
        if (e[i]) M.push_back(&e);
    if (M.empty()) return Form::absent;
    if (M.size() == 1) {
        if (is_pure(*M[0], i)) return Form::pure_power;
        if (is_power_times(*M[0], i)) return Form::power_times;
        return Form::other;
    }
    if (M.size() == 2) {
        for (int s = 0; s < 2; ++s) {
            const Exponent &a = *M[s], &b = *M[1 - s];
            if (!is_linear_in(b, i)) continue;
            if (is_pure(a, i)) return Form::power_plus;
            if (is_power_times(a, i) && a[i] >= 1) return Form::twisted_pair;
        }
    }
    return Form::other;
}

}  // namespace

QuasiSmoothVerdict combinatorial_form_check(const WPolynomial &F) {
    QuasiSmoothVerdict v;
    v.combinatorial_pass = true;
    std::ostringstream diag;
    for (size_t i = 0; i < F.nvars(); ++i) {
        Form f = classify(F, i);
        v.forms.push_back(f);
        if (f == Form::absent) {
            v.combinatorial_pass = false;
            diag << "untouched variable x" << i << "; ";
        } else if (f == Form::other) {
            v.combinatorial_pass = false;
            diag << "x" << i << " matches no allowed form; ";
        }
    }
    v.diagnostic = diag.str();
    return v;
}

bool quasismooth_exact(const WPolynomial &F) {
    gb::Order o{F.weight.w};
    std::vector<gb::Poly> gens;
    for (size_t i = 0; i < F.nvars(); ++i) gens.push_back(gb::partial(o, F, i));
    auto G = gb::groebner(o, gens);
    return gb::zero_dimensional(G, F.nvars());
}

bool quasismooth_fp_probe(const WPolynomial &F, int64_t p) {
    size_t n = F.nvars();
    double space = 1;
    for (size_t i = 0; i < n; ++i) space *= double(p);
    if (space > 1e9) throw SearchTooLarge("probe search space p^n exceeds 1e9");
    if (p < 3) throw std::invalid_argument("probe prime must be at least 3");
    for (auto c : F.coefs)
        if (c % p == 0) throw std::invalid_argument("prime divides a coefficient");
    int maxe = 0;
    for (auto &e : F.exps)
        for (int a : e) maxe = std::max(maxe, a);
    // pw[x][k] = x^k mod p
    std::vector<std::vector<int64_t>> pw(p, std::vector<int64_t>(maxe + 1));
    for (int64_t x = 0; x < p; ++x) {
        pw[x][0] = 1;
        for (int k = 1; k <= maxe; ++k) pw[x][k] = pw[x][k - 1] * x % p;
    }
    std::vector<int64_t> cm(F.nterms());
    for (size_t k = 0; k < F.nterms(); ++k) cm[k] = ((F.coefs[k] % p) + p) % p;
    std::vector<int64_t> x(n, 0);
    std::vector<int64_t> grad(n);
    while (true) {
        // advance odometer; skips the origin on the first step
        size_t d = 0;
        while (d < n && ++x[d] == p) x[d++] = 0;
        if (d == n) break;
        int64_t f = 0;
        std::fill(grad.begin(), grad.end(), 0);
        for (size_t k = 0; k < F.nterms(); ++k) {
            const Exponent &e = F.exps[k];
            int64_t m = cm[k];
            for (size_t v = 0; v < n; ++v) m = m * pw[x[v]][e[v]] % p;
            f += m;
            for (size_t v = 0; v < n; ++v) {
                if (!e[v]) continue;
                int64_t t = cm[k] * (e[v] % p) % p;
                for (size_t u = 0; u < n; ++u) t = t * pw[x[u]][u == v ? e[u] - 1 : e[u]] % p;
                grad[v] += t;
            }
        }
        if (f % p) continue;
        bool all = true;
        for (size_t v = 0; v < n && all; ++v) all = grad[v] % p == 0;
        if (all) return false;
    }
    return true;
}

QuasiSmoothVerdict quasismooth_full(const WPolynomial &F, const std::vector<int64_t> &primes) {
    QuasiSmoothVerdict v = combinatorial_form_check(F);
    v.exact_pass = quasismooth_exact(F);
    for (auto p : primes) {
        bool skip = false;
        // p must not divide a coefficient of F or of any partial
        for (auto c : F.coefs) skip = skip || c % p == 0;
        for (auto &e : F.exps)
            for (int a : e) skip = skip || (a && a % p == 0);
        if (skip) continue;
        v.probe_results.push_back({p, quasismooth_fp_probe(F, p)});
    }
    return v;
}

}  // namespace k3bv
