#include "specht/matrix.hpp"

#include "specht/errors.hpp"

namespace specht {

CMatrix CMatrix::identity(unsigned n, unsigned order) {
    CMatrix m(n, n, order);
    for (unsigned i = 0; i < n; ++i)
        m.at(i, i) = CycElement::one(order);
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (cols_ != o.rows_ || order_ != o.order_)
        throw ParameterMismatch("matrix product shape mismatch");
    CMatrix out(rows_, o.cols_, order_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            const CycElement& a = at(i, k);
            if (a.is_zero())
                continue;
            for (unsigned j = 0; j < o.cols_; ++j)
                out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

CycElement CMatrix::trace() const {
    CycElement t = CycElement::zero(order_);
    for (unsigned i = 0; i < rows_ && i < cols_; ++i)
        t += at(i, i);
    return t;
}

namespace {

// Row echelon reduction in place; returns (rank, pivot columns, det sign
// swaps). Operates on an augmented matrix; elimination restricted to the
// first `lead_cols` columns.
struct Echelon {
    unsigned rank = 0;
    std::vector<unsigned> pivot_col;
    int swaps = 0;
};

Echelon echelonize(std::vector<std::vector<CycElement>>& m, unsigned lead_cols) {
    Echelon e;
    unsigned row = 0;
    const unsigned rows = static_cast<unsigned>(m.size());
    for (unsigned col = 0; col < lead_cols && row < rows; ++col) {
        unsigned pivot = row;
        while (pivot < rows && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != row) {
            std::swap(m[pivot], m[row]);
            ++e.swaps;
        }
        CycElement inv = m[row][col].inverse();
        for (size_t j = col; j < m[row].size(); ++j)
            m[row][j] = m[row][j] * inv;
        for (unsigned i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero())
                continue;
            CycElement factor = m[i][col];
            for (size_t j = col; j < m[i].size(); ++j)
                m[i][j] -= factor * m[row][j];
        }
        e.pivot_col.push_back(col);
        ++row;
    }
    e.rank = row;
    return e;
}

}  // namespace

CycElement CMatrix::determinant() const {
    if (rows_ != cols_)
        throw ParameterMismatch("determinant of a non-square matrix");
    // elimination without normalizing pivots, tracking the product
    std::vector<std::vector<CycElement>> m(rows_);
    for (unsigned i = 0; i < rows_; ++i) {
        m[i].reserve(cols_);
        for (unsigned j = 0; j < cols_; ++j)
            m[i].push_back(at(i, j));
    }
    CycElement det = CycElement::one(order_);
    for (unsigned col = 0; col < cols_; ++col) {
        unsigned pivot = col;
        while (pivot < rows_ && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows_)
            return CycElement::zero(order_);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        CycElement inv = m[col][col].inverse();
        for (unsigned i = col + 1; i < rows_; ++i) {
            if (m[i][col].is_zero())
                continue;
            CycElement factor = m[i][col] * inv;
            for (unsigned j = col; j < cols_; ++j)
                m[i][j] -= factor * m[col][j];
        }
    }
    return det;
}

unsigned CMatrix::rank() const {
    std::vector<std::vector<CycElement>> m(rows_);
    for (unsigned i = 0; i < rows_; ++i) {
        m[i].reserve(cols_);
        for (unsigned j = 0; j < cols_; ++j)
            m[i].push_back(at(i, j));
    }
    return echelonize(m, cols_).rank;
}

CMatrix::SolveResult CMatrix::solve_detailed(const CMatrix& rhs) const {
    if (rhs.rows_ != rows_ || rhs.order_ != order_)
        throw ParameterMismatch("solve shape mismatch");
    std::vector<std::vector<CycElement>> m(rows_);
    for (unsigned i = 0; i < rows_; ++i) {
        m[i].reserve(cols_ + rhs.cols_);
        for (unsigned j = 0; j < cols_; ++j)
            m[i].push_back(at(i, j));
        for (unsigned j = 0; j < rhs.cols_; ++j)
            m[i].push_back(rhs.at(i, j));
    }
    Echelon e = echelonize(m, cols_);
    if (e.rank < cols_)
        return {SolveStatus::rank_deficient, std::nullopt};
    // consistency: rows past the rank must be all-zero in the augmented part
    for (unsigned i = e.rank; i < rows_; ++i)
        for (unsigned j = 0; j < rhs.cols_; ++j)
            if (!m[i][cols_ + j].is_zero())
                return {SolveStatus::inconsistent, std::nullopt};
    CMatrix x(cols_, rhs.cols_, order_);
    for (unsigned i = 0; i < e.rank; ++i)
        for (unsigned j = 0; j < rhs.cols_; ++j)
            x.at(e.pivot_col[i], j) = m[i][cols_ + j];
    return {SolveStatus::ok, std::move(x)};
}

std::optional<CMatrix> CMatrix::solve(const CMatrix& rhs) const {
    return solve_detailed(rhs).x;
}

}  // namespace specht
