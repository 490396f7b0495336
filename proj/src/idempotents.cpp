#include "specht/idempotents.hpp"

namespace specht {

const ShapeBlock& WedderburnData::block(const MultiDiagram& shape) const {
    return blocks[shape_index(shape)];
}

size_t WedderburnData::shape_index(const MultiDiagram& shape) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].shape == shape)
            return i;
    throw ParameterMismatch("shape not in P_{r,n}: " + shape.to_string());
}

namespace {

CycElement dimension_over_order(const SpechtModule& module) {
    long f = static_cast<long>(module.dim());
    long order = static_cast<long>(module.elements.size());
    return CycElement::from_rational(module.basis.front().poly.order(),
                                     Rational(f, order));
}

}  // namespace

GroupAlgebraElement central_idempotent(const SpechtModule& module) {
    const unsigned r = module.elements.front().r;
    const unsigned n = module.elements.front().n();
    CycElement scale = dimension_over_order(module);
    GroupAlgebraElement out(r, n);
    for (const GroupElement& g : module.elements)
        out.add_term(g, module.rho(inverse(g)).trace() * scale);
    return out;
}

GroupAlgebraElement primitive_idempotent(const SpechtModule& module, unsigned i) {
    const unsigned r = module.elements.front().r;
    const unsigned n = module.elements.front().n();
    CycElement scale = dimension_over_order(module);
    GroupAlgebraElement out(r, n);
    for (const GroupElement& g : module.elements)
        out.add_term(g, module.rho(inverse(g)).at(i, i) * scale);
    if (out * out != out)
        throw NotIdempotent("matrix-coefficient idempotent failed e^2 = e for shape " +
                            module.shape.to_string());
    return out;
}

WedderburnData build_wedderburn(unsigned r, unsigned n, TwistConvention convention,
                                uint64_t cap) {
    WedderburnData w;
    w.r = r;
    w.n = n;
    w.convention = convention;
    w.elements = enumerate_group(r, n, cap);
    for (const MultiDiagram& shape : enumerate_diagrams(r, n)) {
        ShapeBlock block{shape, 0, SpechtModule{}, GroupAlgebraElement(r, n), {}};
        RTableau s_star = enumerate_standard(shape).front();
        block.module = build_module(shape, s_star, convention, cap);
        block.dim = block.module.dim();
        block.central = central_idempotent(block.module);
        for (unsigned i = 0; i < block.dim; ++i)
            block.primitive.push_back(primitive_idempotent(block.module, i));
        w.blocks.push_back(std::move(block));
    }
    return w;
}

SparsePoly isotypic_project(const WedderburnData& w, size_t shape_index, const SparsePoly& p) {
    return w.blocks[shape_index].central.apply(p);
}

CycElement specht_eigen_check(const WedderburnData& w, size_t shape_index, const RTableau& S,
                              unsigned t_index, unsigned e_index) {
    const ShapeBlock& block = w.blocks[shape_index];
    const RTableau& T = block.module.standard[t_index];
    SparsePoly f = higher_specht(S, T, w.convention).poly;
    SparsePoly image = block.primitive[e_index].apply(f);
    if (image.is_zero())
        return CycElement::zero(w.r);
    // proportionality: c from the leading coefficients, then exact equality
    const auto& [fm, fc] = *f.terms().rbegin();
    const auto& [im, ic] = *image.terms().rbegin();
    if (!(fm == im))
        throw NotEigen("idempotent image not proportional to F (leading monomials differ)");
    CycElement c = ic / fc;
    if (image != f.scaled(c))
        throw NotEigen("idempotent image not proportional to F for shape " +
                       block.shape.to_string());
    return c;
}

std::vector<MultiplicityRow> multiplicity_report(unsigned r, unsigned n,
                                                 TwistConvention convention, uint64_t cap) {
    uint64_t order = group_order(r, n);
    if (order > cap)
        throw CapExceeded("|G| exceeds cap in multiplicity_report");
    std::vector<MultiplicityRow> rows;
    uint64_t square_sum = 0;
    for (const MultiDiagram& shape : enumerate_diagrams(r, n)) {
        uint64_t f = dimension(shape);
        RTableau star = enumerate_standard(shape).front();
        rows.push_back(MultiplicityRow{shape, f, f, higher_specht(star, star, convention)});
        square_sum += f * f;
    }
    if (square_sum != order)
        throw SpechtError("sum of squared dimensions differs from |G|");
    return rows;
}

}  // namespace specht
