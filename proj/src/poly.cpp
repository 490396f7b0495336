#include "specht/poly.hpp"

#include <atomic>
#include <sstream>

#include "specht/kernels.hpp"

namespace specht {

namespace {
std::atomic<unsigned> g_degree_guard{64};
}

void SparsePoly::set_degree_guard(unsigned bound) { g_degree_guard.store(bound); }
unsigned SparsePoly::degree_guard() { return g_degree_guard.load(); }

SparsePoly SparsePoly::constant(unsigned nvars, const CycElement& c) {
    SparsePoly p(nvars, c.order());
    p.add_term(Monomial{std::vector<uint32_t>(nvars, 0)}, c);
    return p;
}

SparsePoly SparsePoly::variable(unsigned nvars, unsigned order, unsigned var) {
    if (var >= nvars)
        throw IndexOutOfRange("variable index out of range");
    Monomial m{std::vector<uint32_t>(nvars, 0)};
    m.exps[var] = 1;
    return single_term(nvars, m, CycElement::one(order));
}

SparsePoly SparsePoly::single_term(unsigned nvars, const Monomial& m, const CycElement& c) {
    if (m.exps.size() != nvars)
        throw ArityMismatch("monomial arity does not match variable count");
    SparsePoly p(nvars, c.order());
    p.add_term(m, c);
    return p;
}

unsigned SparsePoly::total_degree() const {
    if (terms_.empty())
        return 0;
    // grlex: the maximal key has maximal total degree
    return terms_.rbegin()->first.total_degree();
}

bool SparsePoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    unsigned d = terms_.begin()->first.total_degree();
    return terms_.rbegin()->first.total_degree() == d;
}

void SparsePoly::add_term(const Monomial& m, const CycElement& c) {
    if (m.exps.size() != nvars_)
        throw ArityMismatch("monomial arity does not match variable count");
    if (c.order() != order_)
        throw OrderMismatch("coefficient order does not match polynomial");
    if (c.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void SparsePoly::check_compatible(const SparsePoly& p, const SparsePoly& q) {
    if (p.nvars_ != q.nvars_)
        throw ArityMismatch("polynomials with different variable counts");
    if (p.order_ != q.order_)
        throw OrderMismatch("polynomials over different cyclotomic fields");
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out(nvars_, order_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& q) {
    check_compatible(*this, q);
    for (const auto& [m, c] : q.terms_)
        add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& q) {
    check_compatible(*this, q);
    for (const auto& [m, c] : q.terms_)
        add_term(m, -c);
    return *this;
}

SparsePoly operator+(const SparsePoly& p, const SparsePoly& q) {
    SparsePoly out = p;
    out += q;
    return out;
}

SparsePoly operator-(const SparsePoly& p, const SparsePoly& q) {
    SparsePoly out = p;
    out -= q;
    return out;
}

SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
    SparsePoly::check_compatible(p, q);
    if (p.is_zero() || q.is_zero())
        return SparsePoly(p.nvars_, p.order_);
    if (p.total_degree() + q.total_degree() > SparsePoly::degree_guard())
        throw CapExceeded("product exceeds the total-degree guard (" +
                          std::to_string(SparsePoly::degree_guard()) + ")");
    SparsePoly out(p.nvars_, p.order_);
    out.terms_ = kernels::mul_terms(p.terms_, q.terms_);
    return out;
}

SparsePoly SparsePoly::scaled(const CycElement& c) const {
    if (c.order() != order_)
        throw OrderMismatch("scalar order does not match polynomial");
    SparsePoly out(nvars_, order_);
    if (c.is_zero())
        return out;
    for (const auto& [m, coef] : terms_) {
        CycElement prod = coef * c;
        if (!prod.is_zero())
            out.terms_.emplace(m, std::move(prod));
    }
    return out;
}

SparsePoly SparsePoly::derivative(unsigned var) const {
    if (var >= nvars_)
        throw IndexOutOfRange("derivative variable out of range");
    SparsePoly out(nvars_, order_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[var] == 0)
            continue;
        Monomial dm = m;
        dm.exps[var] -= 1;
        out.add_term(dm, c * CycElement::from_long(order_, m.exps[var]));
    }
    return out;
}

SparsePoly SparsePoly::derivative_iterated(unsigned var, unsigned count) const {
    if (var >= nvars_)
        throw IndexOutOfRange("derivative variable out of range");
    SparsePoly out(nvars_, order_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[var] < count)
            continue;
        Monomial dm = m;
        dm.exps[var] -= count;
        // falling factorial e * (e-1) * ... * (e-count+1)
        Rational factor(1);
        for (unsigned k = 0; k < count; ++k)
            factor *= Rational(static_cast<long>(m.exps[var] - k));
        out.add_term(dm, c * CycElement::from_rational(order_, factor));
    }
    return out;
}

SparsePoly SparsePoly::substitute_scaled_permutation(std::span<const CycElement> scalars,
                                                     std::span<const uint32_t> perm) const {
    if (scalars.size() != nvars_ || perm.size() != nvars_)
        throw ArityMismatch("substitution data does not match variable count");
    SparsePoly out(nvars_, order_);
    for (const auto& [m, c] : terms_) {
        Monomial im{std::vector<uint32_t>(nvars_, 0)};
        CycElement coeff = c;
        for (unsigned k = 0; k < nvars_; ++k) {
            if (m.exps[k] == 0)
                continue;
            im.exps[perm[k]] += m.exps[k];
            coeff = coeff * scalars[k].pow(m.exps[k]);
        }
        out.add_term(im, coeff);
    }
    return out;
}

std::optional<SparsePoly> SparsePoly::divide_exact(const SparsePoly& q) const {
    check_compatible(*this, q);
    if (q.is_zero())
        throw DivisionByZero("exact division by the zero polynomial");
    SparsePoly rem = *this;
    SparsePoly quot(nvars_, order_);
    const auto& [qm, qc] = *q.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        if (!monomial_divides(qm, rm))
            return std::nullopt;  // leading term not divisible: remainder nonzero
        Monomial tm = monomial_div(rm, qm);
        CycElement tc = rc / qc;
        SparsePoly t = single_term(nvars_, tm, tc);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

CycElement SparsePoly::evaluate(const std::vector<CycElement>& point) const {
    if (point.size() != nvars_)
        throw ArityMismatch("evaluation point does not match variable count");
    CycElement acc = CycElement::zero(order_);
    for (const auto& [m, c] : terms_) {
        CycElement term = c;
        for (unsigned k = 0; k < nvars_; ++k)
            if (m.exps[k] > 0)
                term = term * point[k].pow(m.exps[k]);
        acc += term;
    }
    return acc;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << it->second.to_string() << ")";
        for (unsigned k = 0; k < nvars_; ++k) {
            if (it->first.exps[k] == 0)
                continue;
            os << "*x" << (k + 1);
            if (it->first.exps[k] > 1)
                os << "^" << it->first.exps[k];
        }
    }
    return os.str();
}

}  // namespace specht
