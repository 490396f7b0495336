#include "specht/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace specht {

namespace {

// --- univariate helpers on ascending coefficient vectors -------------------

using QPoly = std::vector<Rational>;
using ZPoly = std::vector<mpz_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty())
        return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

QPoly qscale(QPoly a, const Rational& c) {
    for (auto& x : a)
        x *= c;
    trim(a);
    return a;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size())
        a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

// quotient and remainder of a by b, exact rational arithmetic
std::pair<QPoly, QPoly> qdivrem(QPoly a, const QPoly& b) {
    trim(a);
    QPoly quot;
    if (b.empty())
        throw DivisionByZero("polynomial division by zero");
    const Rational& lead = b.back();
    while (degree(a) >= degree(b)) {
        int shift = degree(a) - degree(b);
        Rational c = a.back() / lead;
        if (static_cast<int>(quot.size()) < shift + 1)
            quot.resize(shift + 1, Rational(0));
        quot[shift] += c;
        QPoly t(shift, Rational(0));
        t.reserve(shift + b.size());
        for (const auto& bc : b)
            t.push_back(bc * c);
        a = qsub(std::move(a), t);
    }
    trim(quot);
    return {quot, a};
}

// extended gcd over Q[x]: returns (g, u, v) with u*a + v*b = g
struct ExtGcd {
    QPoly g, u, v;
};

ExtGcd qext_gcd(QPoly a, QPoly b) {
    QPoly r0 = std::move(a), r1 = std::move(b);
    QPoly s0 = {Rational(1)}, s1 = {};
    QPoly t0 = {}, t1 = {Rational(1)};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [q, r2] = qdivrem(r0, r1);
        QPoly s2 = qsub(s0, qmul(q, s1));
        QPoly t2 = qsub(t0, qmul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return {r0, s0, t0};
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    ZPoly out(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// exact division of integer polynomials (divisor monic up to sign of the
// cyclotomic factors involved; Phi_d always monic)
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
    ZPoly quot(a.size() - b.size() + 1, mpz_class(0));
    for (int shift = static_cast<int>(quot.size()) - 1; shift >= 0; --shift) {
        mpz_class c = a[shift + b.size() - 1] / b.back();
        quot[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
    }
    for (const auto& rem : a)
        if (rem != 0)
            throw SpechtError("internal: inexact cyclotomic division");
    return quot;
}

std::mutex phi_mutex;
std::map<unsigned, ZPoly> phi_cache;

const ZPoly& phi_locked(unsigned r) {
    auto it = phi_cache.find(r);
    if (it != phi_cache.end())
        return it->second;
    ZPoly result;
    if (r == 1) {
        result = {mpz_class(-1), mpz_class(1)};  // x - 1
    } else {
        // (x^r - 1) / prod_{d | r, d < r} Phi_d
        ZPoly num(r + 1, mpz_class(0));
        num[0] = -1;
        num[r] = 1;
        ZPoly den = {mpz_class(1)};
        for (unsigned d = 1; d < r; ++d)
            if (r % d == 0)
                den = zmul(den, phi_locked(d));
        result = zdiv_exact(std::move(num), den);
    }
    return phi_cache.emplace(r, std::move(result)).first->second;
}

QPoly phi_rational(unsigned r) {
    const ZPoly& z = cyclotomic_polynomial(r);
    QPoly out;
    out.reserve(z.size());
    for (const auto& c : z)
        out.emplace_back(c);
    return out;
}

}  // namespace

unsigned totient(unsigned r) {
    if (r == 0)
        throw SpechtError("totient of 0");
    unsigned result = r, m = r;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0)
                m /= p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned r) {
    if (r == 0)
        throw SpechtError("cyclotomic polynomial of order 0");
    std::lock_guard<std::mutex> lock(phi_mutex);
    return phi_locked(r);
}

CycElement CycElement::zero(unsigned r) {
    return CycElement(r, std::vector<Rational>(totient(r), Rational(0)));
}

CycElement CycElement::one(unsigned r) { return from_rational(r, Rational(1)); }

CycElement CycElement::from_rational(unsigned r, const Rational& q) {
    std::vector<Rational> c(totient(r), Rational(0));
    c[0] = q;
    return CycElement(r, std::move(c));
}

CycElement CycElement::from_coeffs(unsigned r, std::vector<Rational> coeffs) {
    QPoly p = std::move(coeffs);
    trim(p);
    if (p.size() > totient(r))
        p = qdivrem(std::move(p), phi_rational(r)).second;
    p.resize(totient(r), Rational(0));
    return CycElement(r, std::move(p));
}

CycElement CycElement::xi_pow(unsigned r, long k) {
    long e = k % static_cast<long>(r);
    if (e < 0)
        e += r;
    std::vector<Rational> c(static_cast<size_t>(e) + 1, Rational(0));
    c.back() = Rational(1);
    return from_coeffs(r, std::move(c));
}

bool CycElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

bool CycElement::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            return false;
    return true;
}

void CycElement::check_same_order(const CycElement& a, const CycElement& b) {
    if (a.order_ != b.order_)
        throw OrderMismatch("cyclotomic elements of different order: " +
                            std::to_string(a.order_) + " vs " + std::to_string(b.order_));
}

CycElement CycElement::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        c[i] = -coeffs_[i];
    return CycElement(order_, std::move(c));
}

CycElement operator+(const CycElement& a, const CycElement& b) {
    CycElement::check_same_order(a, b);
    std::vector<Rational> c(a.coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeffs_[i] + b.coeffs_[i];
    return CycElement(a.order_, std::move(c));
}

CycElement operator-(const CycElement& a, const CycElement& b) {
    CycElement::check_same_order(a, b);
    std::vector<Rational> c(a.coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeffs_[i] - b.coeffs_[i];
    return CycElement(a.order_, std::move(c));
}

CycElement operator*(const CycElement& a, const CycElement& b) {
    CycElement::check_same_order(a, b);
    QPoly pa(a.coeffs_), pb(b.coeffs_);
    trim(pa);
    trim(pb);
    if (pa.empty() || pb.empty())
        return CycElement::zero(a.order_);
    QPoly prod = qmul(pa, pb);
    return CycElement::from_coeffs(a.order_, std::move(prod));
}

CycElement CycElement::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of zero cyclotomic element");
    QPoly p(coeffs_);
    trim(p);
    auto [g, u, v] = qext_gcd(p, phi_rational(order_));
    (void)v;
    if (degree(g) != 0)
        throw SpechtError("internal: gcd with Phi_r not constant");
    return from_coeffs(order_, qscale(std::move(u), Rational(1) / g[0]));
}

CycElement operator/(const CycElement& a, const CycElement& b) {
    CycElement::check_same_order(a, b);
    return a * b.inverse();
}

CycElement CycElement::conjugate() const {
    // substitute xi -> xi^{r-1} = xi^{-1}
    CycElement acc = zero(order_);
    CycElement xinv = xi_pow(order_, -1);
    CycElement p = one(order_);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero())
            acc += p * from_rational(order_, coeffs_[k]);
        if (k + 1 < coeffs_.size())
            p = p * xinv;
    }
    return acc;
}

CycElement CycElement::scaled_by_rational(const Rational& q) const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        c[i] = coeffs_[i] * q;
    return CycElement(order_, std::move(c));
}

CycElement CycElement::pow(unsigned k) const {
    CycElement base = *this, acc = one(order_);
    while (k > 0) {
        if (k & 1u)
            acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

std::string CycElement::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero())
            continue;
        Rational abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0)
                os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << abs.to_string();
        } else {
            if (!abs.is_one())
                os << abs.to_string() << "*";
            os << "z";
            if (k > 1)
                os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace specht
