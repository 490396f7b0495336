#pragma once

#include <map>

#include "specht/group.hpp"

namespace specht {

// Formal Q(xi_r)-linear combination of elements of G(r,n). Zero coefficients
// are never stored. Products are convolutions; application to polynomials is
// the linear extension of the group action.
class GroupAlgebraElement {
  public:
    using CoeffMap = std::map<GroupElement, CycElement>;

    GroupAlgebraElement(unsigned r, unsigned n) : r_(r), n_(n) {}

    static GroupAlgebraElement unit(unsigned r, unsigned n);
    static GroupAlgebraElement from_element(const GroupElement& g);

    unsigned r() const { return r_; }
    unsigned n() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }
    size_t support_size() const { return coeffs_.size(); }
    const CoeffMap& coeffs() const { return coeffs_; }

    // Coefficient of g (zero element when absent).
    CycElement coeff(const GroupElement& g) const;

    void add_term(const GroupElement& g, const CycElement& c);

    GroupAlgebraElement operator-() const;
    friend GroupAlgebraElement operator+(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator-(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b);
    // Convolution product.
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b);
    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);

    GroupAlgebraElement scaled(const CycElement& c) const;

    // Linear extension of act().
    SparsePoly apply(const SparsePoly& p) const;

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.r_ == b.r_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return !(a == b);
    }

  private:
    static void check_same(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

    unsigned r_;
    unsigned n_;
    CoeffMap coeffs_;
};

}  // namespace specht
