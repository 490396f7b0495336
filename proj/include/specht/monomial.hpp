#pragma once

#include <cstdint>
#include <vector>

namespace specht {

// Exponent vector; length equals the ambient variable count.
struct Monomial {
    std::vector<uint32_t> exps;

    unsigned total_degree() const {
        unsigned d = 0;
        for (uint32_t e : exps)
            d += e;
        return d;
    }

    bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order with x1 heaviest; the fixed term order for
// division and for serialized output.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db)
            return da < db;
        for (size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] != b.exps[i])
                return a.exps[i] < b.exps[i];
        return false;
    }
};

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (size_t i = 0; i < b.exps.size(); ++i)
        out.exps[i] += b.exps[i];
    return out;
}

inline bool monomial_divides(const Monomial& divisor, const Monomial& m) {
    for (size_t i = 0; i < m.exps.size(); ++i)
        if (divisor.exps[i] > m.exps[i])
            return false;
    return true;
}

inline Monomial monomial_div(const Monomial& m, const Monomial& divisor) {
    Monomial out = m;
    for (size_t i = 0; i < m.exps.size(); ++i)
        out.exps[i] -= divisor.exps[i];
    return out;
}

}  // namespace specht
