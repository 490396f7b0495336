#pragma once

#include <optional>
#include <vector>

#include "specht/cyclotomic.hpp"

namespace specht {

// Dense matrix over Q(xi_r). Small sizes only; exact field arithmetic
// throughout (Gaussian elimination with exact division).
class CMatrix {
  public:
    CMatrix(unsigned rows, unsigned cols, unsigned order)
        : rows_(rows), cols_(cols), order_(order),
          data_(static_cast<size_t>(rows) * cols, CycElement::zero(order)) {}

    static CMatrix identity(unsigned n, unsigned order);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    unsigned order() const { return order_; }

    CycElement& at(unsigned i, unsigned j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const CycElement& at(unsigned i, unsigned j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    CMatrix operator*(const CMatrix& o) const;
    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

    CycElement trace() const;
    CycElement determinant() const;  // square only
    unsigned rank() const;

    enum class SolveStatus { ok, rank_deficient, inconsistent };
    struct SolveResult;  // defined after the class

    // Solves A X = B for X (A is this matrix, possibly overdetermined;
    // unique solution required).
    SolveResult solve_detailed(const CMatrix& rhs) const;
    std::optional<CMatrix> solve(const CMatrix& rhs) const;

  private:
    unsigned rows_, cols_, order_;
    std::vector<CycElement> data_;
};

struct CMatrix::SolveResult {
    SolveStatus status;
    std::optional<CMatrix> x;
};

}  // namespace specht
