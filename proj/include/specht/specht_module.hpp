#pragma once

#include <map>
#include <string>
#include <vector>

#include "specht/group_algebra.hpp"
#include "specht/matrix.hpp"
#include "specht/tableaux.hpp"

namespace specht {

// The component twist in the higher Specht polynomial: x_k^{c(nu)} for every
// k in component nu, with c(nu) = nu under `nu` and c(nu) = nu - 1 under
// `nu_minus_one` (the default; it puts the trivial representation in
// degree 0).
enum class TwistConvention { nu, nu_minus_one };

std::string to_string(TwistConvention c);
TwistConvention twist_convention_from_string(const std::string& s);

// Young symmetrizer of a single-component tableau (rows of distinct values
// from 1..n), embedded in G(r,n) with zero twists:
//   (1/alpha) sum over sigma in the row stabilizer, tau in the column
//   stabilizer of sgn(tau) tau sigma.
GroupAlgebraElement young_symmetrizer(const std::vector<std::vector<uint32_t>>& rows, unsigned r,
                                      unsigned n);

struct SpechtRecord {
    MultiDiagram shape;
    RTableau S;
    RTableau T;
    SparsePoly poly;
    TwistConvention convention;
};

// F_T^S: per component nu, the Young symmetrizer of T^nu applied to the
// monomial with exponent r*i(S)^nu on the cells of T^nu, times the twist
// prod_{k in T^nu} x_k^{c(nu)}; product over components.
SpechtRecord higher_specht(const RTableau& S, const RTableau& T,
                           TwistConvention convention = TwistConvention::nu_minus_one);

// The module V_S(lambda) with basis {F_T^S : T in STab(lambda)} and the
// exact representation matrices of every group element in that basis.
struct SpechtModule {
    MultiDiagram shape;
    RTableau S;
    TwistConvention convention;
    std::vector<RTableau> standard;   // STab(lambda), enumeration order
    std::vector<SpechtRecord> basis;  // F_T^S per standard[i]
    std::vector<GroupElement> elements;
    std::map<GroupElement, CMatrix> rep;

    unsigned dim() const { return static_cast<unsigned>(basis.size()); }
    const CMatrix& rho(const GroupElement& g) const;
};

SpechtModule build_module(const MultiDiagram& shape, const RTableau& S,
                          TwistConvention convention = TwistConvention::nu_minus_one,
                          uint64_t cap = 10000);

using Character = std::map<GroupElement, CycElement>;

Character character(const SpechtModule& module);

// Theorem-level: characters agree iff the shapes agree.
bool shape_isomorphism_check(const SpechtModule& a, const SpechtModule& b);

// Determinant of the |G| x |G| matrix with rows indexed by group elements,
// columns by pairs (S, T) over all shapes, entries act(g, F_T^S) evaluated
// at a generic point. Nonzero certifies that the higher Specht polynomials
// are independent over the invariant ring. Retries with fresh random
// rational points on a zero determinant; ZeroDeterminant after 3 retries.
CycElement free_basis_certificate(unsigned r, unsigned n,
                                  TwistConvention convention = TwistConvention::nu_minus_one,
                                  uint64_t seed = 0, uint64_t cap = 10000,
                                  const std::vector<CycElement>* point_override = nullptr);

// Helpers shared with other modules.
std::vector<Monomial> monomial_support(const std::vector<SparsePoly>& polys);
CMatrix coefficient_matrix(const std::vector<Monomial>& support,
                           const std::vector<SparsePoly>& polys, unsigned order);

}  // namespace specht
