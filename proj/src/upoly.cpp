#include "upoly.hpp"

namespace k3bv::upoly {

void trim(RPoly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

RPoly derivative(const RPoly &a) {
    RPoly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * int(i));
    trim(d);
    return d;
}

RPoly rem(RPoly a, const RPoly &b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        size_t sh = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + sh] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

RPoly gcd(RPoly a, RPoly b) {
    trim(a), trim(b);
    while (!b.empty()) {
        RPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

static RPoly lift(const std::vector<int64_t> &c) {
    RPoly a(c.begin(), c.end());
    trim(a);
    return a;
}

int distinct_roots(const std::vector<int64_t> &coefs) {
    RPoly a = lift(coefs);
    if (a.empty()) throw std::invalid_argument("zero polynomial has no finite root set");
    RPoly g = gcd(a, derivative(a));
    return int(a.size()) - int(g.size());
}

bool squarefree(const std::vector<int64_t> &coefs) {
    RPoly a = lift(coefs);
    return gcd(a, derivative(a)).size() <= 1;
}

}  // namespace k3bv::upoly
