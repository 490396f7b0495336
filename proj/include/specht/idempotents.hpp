#pragma once

#include "specht/specht_module.hpp"

namespace specht {

// One Wedderburn block of C[G(r,n)]: the shape, its module built from the
// lexicographically least standard tableau S*, the primitive central
// idempotent r_lambda and the primitive idempotents e_T (one per standard
// tableau, in enumeration order).
struct ShapeBlock {
    MultiDiagram shape;
    unsigned dim;  // f^lambda
    SpechtModule module;
    GroupAlgebraElement central;
    std::vector<GroupAlgebraElement> primitive;
};

struct WedderburnData {
    unsigned r = 1;
    unsigned n = 0;
    TwistConvention convention = TwistConvention::nu_minus_one;
    std::vector<GroupElement> elements;
    std::vector<ShapeBlock> blocks;  // diagram enumeration order

    const ShapeBlock& block(const MultiDiagram& shape) const;
    size_t shape_index(const MultiDiagram& shape) const;
};

// r_lambda = (f/|G|) sum_g chi(g^{-1}) g from the block's character.
GroupAlgebraElement central_idempotent(const SpechtModule& module);

// e_{T_i} = (f/|G|) sum_g rho(g^{-1})_{ii} g; NotIdempotent when the exact
// check e^2 = e fails.
GroupAlgebraElement primitive_idempotent(const SpechtModule& module, unsigned i);

WedderburnData build_wedderburn(unsigned r, unsigned n,
                                TwistConvention convention = TwistConvention::nu_minus_one,
                                uint64_t cap = 10000);

// Projection onto the lambda-isotypic component: application of r_lambda.
SparsePoly isotypic_project(const WedderburnData& w, size_t shape_index, const SparsePoly& p);

// Scalar c with e_{T_i} F_{T_i}^S = c F_{T_i}^S (c = 0 allowed only for a
// mismatched idempotent/tableau pair); NotEigen when the image is not
// proportional to F.
CycElement specht_eigen_check(const WedderburnData& w, size_t shape_index, const RTableau& S,
                              unsigned t_index, unsigned e_index);

struct MultiplicityRow {
    MultiDiagram shape;
    uint64_t dim;
    uint64_t multiplicity;
    SpechtRecord generator;  // F_{T*}^{S*}
};

// Decomposition table: each shape with dimension, multiplicity (= f^lambda)
// and its fixed generator; the dimension squares sum to |G|.
std::vector<MultiplicityRow> multiplicity_report(
    unsigned r, unsigned n, TwistConvention convention = TwistConvention::nu_minus_one,
    uint64_t cap = 10000);

}  // namespace specht
