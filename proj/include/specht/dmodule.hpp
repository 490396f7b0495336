#pragma once

#include "specht/idempotents.hpp"

namespace specht {

// The invariant map y_j = e_j(x_1^r, ..., x_n^r), its Jacobian matrix
// A = (dy_j/dx_i), the adjugate of A, and Delta = det(A). Built once per
// (r, n) and shared immutably.
struct InvariantMap {
    unsigned r = 1;
    unsigned n = 0;
    std::vector<SparsePoly> y;
    std::vector<std::vector<SparsePoly>> jac;  // jac[i][j] = d y_{j+1} / d x_{i+1}
    std::vector<std::vector<SparsePoly>> adj;  // adjugate: adj * jac = Delta * I
    SparsePoly delta = SparsePoly(0, 1);
};

// The fundamental invariants e_j(x_1^r, ..., x_n^r) for j = 1..n.
std::vector<SparsePoly> fundamental_invariants(unsigned r, unsigned n);

// n <= 4 (symbolic determinant growth); the determinant is verified against
// the closed form c * prod_i x_i^{r-1} * prod_{i<j} (x_i^r - x_j^r).
InvariantMap build_invariant_map(unsigned r, unsigned n);

// Element numerator / Delta^delta_power of O_U = C[x, Delta^{-1}], kept with
// the Delta power minimal (fully cancelled).
struct LocalizedPoly {
    SparsePoly num;
    unsigned delta_power = 0;

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const LocalizedPoly&) const = default;
};

LocalizedPoly localize(const InvariantMap& im, SparsePoly num, unsigned delta_power = 0);
LocalizedPoly localized_add(const InvariantMap& im, const LocalizedPoly& a,
                            const LocalizedPoly& b);
LocalizedPoly localized_mul(const InvariantMap& im, const LocalizedPoly& a,
                            const LocalizedPoly& b);

// d/dy_j via the inverse Jacobian: with f = p / Delta^m,
//   d/dy_j f = [sum_i adj(A)_{ji} (Delta d_i p - m p d_i Delta)] / Delta^{m+2},
// canonicalized afterwards. j is 0-based.
LocalizedPoly apply_dy(const InvariantMap& im, unsigned j, const LocalizedPoly& f);

// The finitely-tested family of invariant differential operators: the Euler
// operator, the degree-lowering power sums of d_i^{rk}, multiplication by a
// fundamental invariant, plus the deliberately non-invariant control d/dx_1.
struct InvariantOperator {
    enum class Kind { euler, power_lower, mult_invariant, partial_x1 };
    Kind kind = Kind::euler;
    unsigned param = 0;  // k for power_lower, j (0-based) for mult_invariant

    static InvariantOperator euler() { return {Kind::euler, 0}; }
    static InvariantOperator power_lower(unsigned k) { return {Kind::power_lower, k}; }
    static InvariantOperator mult_invariant(unsigned j) { return {Kind::mult_invariant, j}; }
    static InvariantOperator partial_x1() { return {Kind::partial_x1, 0}; }

    std::string name() const;
};

SparsePoly apply_operator(const InvariantMap& im, const InvariantOperator& op,
                          const SparsePoly& p);

enum class SchurVerdict { zero, isomorphic_copy };

std::string to_string(SchurVerdict v);

// Applies op to every basis polynomial of the module. Zero when the module
// is annihilated; otherwise verifies the images are linearly independent,
// span a G-stable space, and carry the character of the module --
// TheoremViolation on anything else.
SchurVerdict schur_image_check(const InvariantMap& im, const SpechtModule& module,
                               const InvariantOperator& op);

// act(g, D p) == D act(g, p) for every group element and `samples` random
// polynomials of total degree <= max_degree.
bool equivariance_check(const InvariantMap& im, const InvariantOperator& op, unsigned samples,
                        uint64_t seed, unsigned max_degree = 4, uint64_t cap = 10000);

struct IsotypyEntry {
    std::string word;
    unsigned degree = 0;
    std::vector<size_t> shapes_hit;  // indices into the diagram enumeration
};

struct IsotypyReport {
    size_t shape_index = 0;
    unsigned degree_bound = 0;
    std::vector<IsotypyEntry> entries;  // nonzero images within the bound
    bool single_shape = false;          // every entry hits exactly the source shape
};

// Applies all words of length <= 2 in {euler, power_lower(1),
// mult_invariant(j)} to F_{T*}^{S*} of the given shape, projects every
// surviving image onto each isotypic component, and reports the shapes hit.
IsotypyReport truncated_isotypy_scan(const WedderburnData& w, const InvariantMap& im,
                                     size_t shape_index, unsigned degree_bound);

}  // namespace specht
