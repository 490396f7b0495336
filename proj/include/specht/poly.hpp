#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specht/cyclotomic.hpp"
#include "specht/monomial.hpp"

namespace specht {

using TermMap = std::map<Monomial, CycElement, GrlexLess>;

// Sparse multivariate polynomial in nvars variables over Q(xi_order).
// No zero coefficients are ever stored; equality is term-map equality.
// Values are immutable in use: every operation returns a fresh polynomial.
class SparsePoly {
  public:
    SparsePoly(unsigned nvars, unsigned order) : nvars_(nvars), order_(order) {}

    static SparsePoly constant(unsigned nvars, const CycElement& c);
    static SparsePoly from_rational(unsigned nvars, unsigned order, const Rational& q) {
        return constant(nvars, CycElement::from_rational(order, q));
    }
    // x_var (0-based variable index)
    static SparsePoly variable(unsigned nvars, unsigned order, unsigned var);
    static SparsePoly single_term(unsigned nvars, const Monomial& m, const CycElement& c);

    unsigned nvars() const { return nvars_; }
    unsigned order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    unsigned total_degree() const;  // 0 for the zero polynomial
    bool is_homogeneous() const;

    // Accumulate c on monomial m, dropping the term if it cancels to zero.
    void add_term(const Monomial& m, const CycElement& c);

    SparsePoly operator-() const;
    friend SparsePoly operator+(const SparsePoly& p, const SparsePoly& q);
    friend SparsePoly operator-(const SparsePoly& p, const SparsePoly& q);
    friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q);
    SparsePoly& operator+=(const SparsePoly& q);
    SparsePoly& operator-=(const SparsePoly& q);

    SparsePoly scaled(const CycElement& c) const;

    friend bool operator==(const SparsePoly& p, const SparsePoly& q) {
        return p.nvars_ == q.nvars_ && p.order_ == q.order_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const SparsePoly& p, const SparsePoly& q) { return !(p == q); }

    // Formal partial derivative with respect to x_var (0-based).
    SparsePoly derivative(unsigned var) const;
    // d^count/dx_var^count, done directly on exponents.
    SparsePoly derivative_iterated(unsigned var, unsigned count) const;

    // Substitutes x_k -> scalars[k] * x_{perm[k]} (0-based); the kernel of
    // the group action.
    SparsePoly substitute_scaled_permutation(std::span<const CycElement> scalars,
                                             std::span<const uint32_t> perm) const;

    // Quotient when q divides *this exactly under grlex long division,
    // std::nullopt otherwise.
    std::optional<SparsePoly> divide_exact(const SparsePoly& q) const;

    CycElement evaluate(const std::vector<CycElement>& point) const;

    // Guard on the total degree of products; CapExceeded past it.
    static void set_degree_guard(unsigned bound);
    static unsigned degree_guard();

    // Terms in descending grlex, coefficients parenthesized.
    std::string to_string() const;

  private:
    static void check_compatible(const SparsePoly& p, const SparsePoly& q);

    unsigned nvars_;
    unsigned order_;
    TermMap terms_;
};

}  // namespace specht
