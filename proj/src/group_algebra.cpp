#include "specht/group_algebra.hpp"

#include "specht/kernels.hpp"

namespace specht {

GroupAlgebraElement GroupAlgebraElement::unit(unsigned r, unsigned n) {
    return from_element(GroupElement::identity(r, n));
}

GroupAlgebraElement GroupAlgebraElement::from_element(const GroupElement& g) {
    GroupAlgebraElement a(g.r, g.n());
    a.add_term(g, CycElement::one(g.r));
    return a;
}

CycElement GroupAlgebraElement::coeff(const GroupElement& g) const {
    auto it = coeffs_.find(g);
    if (it == coeffs_.end())
        return CycElement::zero(r_);
    return it->second;
}

void GroupAlgebraElement::add_term(const GroupElement& g, const CycElement& c) {
    if (g.r != r_ || g.n() != n_)
        throw ParameterMismatch("group element does not match algebra parameters");
    if (c.order() != r_)
        throw OrderMismatch("coefficient order does not match algebra");
    if (c.is_zero())
        return;
    auto it = coeffs_.find(g);
    if (it == coeffs_.end()) {
        coeffs_.emplace(g, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
}

void GroupAlgebraElement::check_same(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.r_ != b.r_ || a.n_ != b.n_)
        throw ParameterMismatch("group algebra elements over different groups");
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
    GroupAlgebraElement out(r_, n_);
    for (const auto& [g, c] : coeffs_)
        out.coeffs_.emplace(g, -c);
    return out;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    check_same(*this, o);
    for (const auto& [g, c] : o.coeffs_)
        add_term(g, c);
    return *this;
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement out = a;
    out += b;
    return out;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement out = a;
    out += -b;
    return out;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement::check_same(a, b);
    GroupAlgebraElement out(a.r_, a.n_);
    out.coeffs_ = kernels::convolve(
        a.coeffs_, b.coeffs_,
        [](const GroupElement& g, const GroupElement& h) { return compose(g, h); });
    return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const CycElement& c) const {
    if (c.order() != r_)
        throw OrderMismatch("scalar order does not match algebra");
    GroupAlgebraElement out(r_, n_);
    if (c.is_zero())
        return out;
    for (const auto& [g, coef] : coeffs_) {
        CycElement prod = coef * c;
        if (!prod.is_zero())
            out.coeffs_.emplace(g, std::move(prod));
    }
    return out;
}

SparsePoly GroupAlgebraElement::apply(const SparsePoly& p) const {
    if (p.nvars() != n_ || p.order() != r_)
        throw ParameterMismatch("polynomial does not match algebra parameters");
    std::vector<CycElement> weights;
    std::vector<const GroupElement*> elems;
    weights.reserve(coeffs_.size());
    elems.reserve(coeffs_.size());
    for (const auto& [g, c] : coeffs_) {
        elems.push_back(&g);
        weights.push_back(c);
    }
    return kernels::weighted_poly_sum(
        weights, [&](size_t i) { return act(*elems[i], p); }, n_, r_);
}

}  // namespace specht
