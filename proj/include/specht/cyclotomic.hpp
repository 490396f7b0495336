#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specht/rational.hpp"

namespace specht {

unsigned totient(unsigned r);

// Coefficients of the r-th cyclotomic polynomial Phi_r, ascending degree,
// integer entries. Computed by exact division of x^r - 1 by the product of
// Phi_d over the proper divisors d of r, and cached per r.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned r);

// Element of the cyclotomic field Q(xi_r), xi a primitive r-th root of 1,
// stored as the canonical residue modulo Phi_r: a coefficient vector of
// length phi(r). Equality is coefficient-wise; values are immutable in
// spirit (all operations return fresh values) and safe to share across
// threads.
class CycElement {
  public:
    CycElement() : CycElement(zero(1)) {}

    static CycElement zero(unsigned r);
    static CycElement one(unsigned r);
    static CycElement from_rational(unsigned r, const Rational& q);
    static CycElement from_long(unsigned r, long v) { return from_rational(r, Rational(v)); }
    // xi^k, k may be negative.
    static CycElement xi_pow(unsigned r, long k);
    static CycElement xi(unsigned r) { return xi_pow(r, 1); }
    // From an arbitrary-degree coefficient vector (reduced mod Phi_r).
    static CycElement from_coeffs(unsigned r, std::vector<Rational> coeffs);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;  // no xi component
    // Valid only when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    CycElement operator-() const;
    CycElement inverse() const;      // DivisionByZero on 0
    CycElement conjugate() const;    // Galois map xi -> xi^{-1}
    CycElement pow(unsigned k) const;
    CycElement scaled_by_rational(const Rational& q) const;

    friend CycElement operator+(const CycElement& a, const CycElement& b);
    friend CycElement operator-(const CycElement& a, const CycElement& b);
    friend CycElement operator*(const CycElement& a, const CycElement& b);
    friend CycElement operator/(const CycElement& a, const CycElement& b);
    CycElement& operator+=(const CycElement& o) { return *this = *this + o; }
    CycElement& operator-=(const CycElement& o) { return *this = *this - o; }
    CycElement& operator*=(const CycElement& o) { return *this = *this * o; }

    friend bool operator==(const CycElement& a, const CycElement& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycElement& a, const CycElement& b) { return !(a == b); }

    // Deterministic rendering with xi printed as "z", e.g. "1/2 - z^2".
    std::string to_string() const;

  private:
    CycElement(unsigned r, std::vector<Rational> c) : order_(r), coeffs_(std::move(c)) {}
    static void check_same_order(const CycElement& a, const CycElement& b);

    unsigned order_;
    std::vector<Rational> coeffs_;  // length phi(order_)
};

}  // namespace specht
