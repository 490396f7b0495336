#include "specht/group.hpp"

#include <algorithm>
#include <numeric>

namespace specht {

bool GroupElement::is_identity() const {
    for (uint32_t t : twists)
        if (t != 0)
            return false;
    for (uint32_t k = 0; k < perm.size(); ++k)
        if (perm[k] != k)
            return false;
    return true;
}

GroupElement GroupElement::identity(unsigned r, unsigned n) {
    GroupElement g;
    g.r = r;
    g.twists.assign(n, 0);
    g.perm.resize(n);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    return g;
}

GroupElement GroupElement::from_permutation(unsigned r, std::vector<uint32_t> perm) {
    GroupElement g;
    g.r = r;
    g.twists.assign(perm.size(), 0);
    g.perm = std::move(perm);
    return g;
}

bool GroupElement::operator<(const GroupElement& o) const {
    if (twists != o.twists)
        return twists < o.twists;
    return perm < o.perm;
}

uint64_t group_order(unsigned r, unsigned n) {
    uint64_t order = 1;
    for (unsigned k = 0; k < n; ++k) {
        if (order > UINT64_MAX / r)
            throw CapExceeded("group order overflows");
        order *= r;
    }
    for (unsigned k = 2; k <= n; ++k) {
        if (order > UINT64_MAX / k)
            throw CapExceeded("group order overflows");
        order *= k;
    }
    return order;
}

static void check_same_group(const GroupElement& g, const GroupElement& h) {
    if (g.r != h.r || g.n() != h.n())
        throw ParameterMismatch("group elements from different G(r,n)");
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    check_same_group(g, h);
    const unsigned n = g.n();
    std::vector<uint32_t> sigma_inv(n);
    for (unsigned k = 0; k < n; ++k)
        sigma_inv[g.perm[k]] = k;

    GroupElement out;
    out.r = g.r;
    out.twists.resize(n);
    out.perm.resize(n);
    // (xi^{i_1},...,xi^{i_n}; sigma)(xi^{j_1},...,xi^{j_n}; pi)
    //   = (xi^{i_1 + j_{sigma^{-1}(1)}}, ...; sigma pi)
    for (unsigned k = 0; k < n; ++k) {
        out.twists[k] = (g.twists[k] + h.twists[sigma_inv[k]]) % g.r;
        out.perm[k] = g.perm[h.perm[k]];
    }
    return out;
}

GroupElement inverse(const GroupElement& g) {
    const unsigned n = g.n();
    GroupElement out;
    out.r = g.r;
    out.twists.resize(n);
    out.perm.resize(n);
    for (unsigned k = 0; k < n; ++k)
        out.perm[g.perm[k]] = k;
    for (unsigned k = 0; k < n; ++k)
        out.twists[k] = (g.r - g.twists[g.perm[k]] % g.r) % g.r;
    return out;
}

SparsePoly act(const GroupElement& g, const SparsePoly& p) {
    if (g.n() != p.nvars() || g.r != p.order())
        throw ParameterMismatch("group element does not match polynomial parameters");
    const unsigned n = g.n();
    std::vector<CycElement> scalars;
    scalars.reserve(n);
    for (unsigned k = 0; k < n; ++k)
        scalars.push_back(CycElement::xi_pow(g.r, g.twists[g.perm[k]]));
    return p.substitute_scaled_permutation(scalars, g.perm);
}

std::vector<GroupElement> enumerate_group(unsigned r, unsigned n, uint64_t cap) {
    uint64_t order = group_order(r, n);
    if (order > cap)
        throw CapExceeded("|G(" + std::to_string(r) + "," + std::to_string(n) + ")| = " +
                          std::to_string(order) + " exceeds cap " + std::to_string(cap));
    std::vector<GroupElement> out;
    out.reserve(order);

    std::vector<uint32_t> twists(n, 0);
    bool twists_done = false;
    while (!twists_done) {
        std::vector<uint32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            GroupElement g;
            g.r = r;
            g.twists = twists;
            g.perm = perm;
            out.push_back(std::move(g));
        } while (std::next_permutation(perm.begin(), perm.end()));

        // odometer increment, lexicographic major-to-minor on the left
        twists_done = true;
        for (int k = static_cast<int>(n) - 1; k >= 0; --k) {
            if (twists[k] + 1 < r) {
                ++twists[k];
                std::fill(twists.begin() + k + 1, twists.end(), 0);
                twists_done = false;
                break;
            }
        }
        if (n == 0)
            break;
    }
    return out;
}

int permutation_sign(const std::vector<uint32_t>& perm) {
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (size_t k = 0; k < perm.size(); ++k) {
        if (seen[k])
            continue;
        size_t len = 0, j = k;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

}  // namespace specht
