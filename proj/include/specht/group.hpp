#pragma once

#include <cstdint>
#include <vector>

#include "specht/poly.hpp"

namespace specht {

// Element (xi^{i_1}, ..., xi^{i_n}; sigma) of G(r,n) = (Z/rZ)^n x| S_n.
// twists[k] is i_{k+1} reduced into [0, r); perm[k] = sigma(k), 0-based.
struct GroupElement {
    uint32_t r = 1;
    std::vector<uint32_t> twists;
    std::vector<uint32_t> perm;

    unsigned n() const { return static_cast<unsigned>(perm.size()); }
    bool is_identity() const;

    static GroupElement identity(unsigned r, unsigned n);
    // Permutation with zero twists.
    static GroupElement from_permutation(unsigned r, std::vector<uint32_t> perm);

    bool operator==(const GroupElement&) const = default;
    // Lexicographic on (twists, one-line permutation): the enumeration order.
    bool operator<(const GroupElement& o) const;
};

uint64_t group_order(unsigned r, unsigned n);  // r^n * n!, overflow-checked

GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// Left action on polynomials: substitutes x_k -> xi^{i_{sigma(k)}} x_{sigma(k)}.
SparsePoly act(const GroupElement& g, const SparsePoly& p);

// All of G(r,n) in the deterministic (twists, perm) order.
std::vector<GroupElement> enumerate_group(unsigned r, unsigned n, uint64_t cap = 10000);

int permutation_sign(const std::vector<uint32_t>& perm);

}  // namespace specht
