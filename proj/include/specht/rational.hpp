#pragma once

#include <gmpxx.h>

#include <string>

#include "specht/errors.hpp"

namespace specht {

// Arbitrary-precision rational, always reduced with positive denominator.
// Thin wrapper over GMP's mpq_class; all arithmetic is exact.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long num) : v_(num) {}  // NOLINT: implicit by design
    Rational(long num, long den) {
        if (den == 0)
            throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    static Rational from_strings(const std::string& num, const std::string& den) {
        mpz_class n(num), d(den);
        if (d == 0)
            throw DivisionByZero("rational with zero denominator");
        mpq_class q(n);
        q /= mpq_class(d);
        return Rational(q);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    std::string num_string() const { return v_.get_num().get_str(); }
    std::string den_string() const { return v_.get_den().get_str(); }

    // "n" when the denominator is 1, otherwise "n/d".
    std::string to_string() const {
        if (is_integer())
            return num_string();
        return num_string() + "/" + den_string();
    }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

}  // namespace specht
