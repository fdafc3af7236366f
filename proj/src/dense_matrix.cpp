#include "lefschetz/detail/dense_matrix.hpp"

#include <utility>

namespace lefschetz::detail {

std::vector<Rational> DenseMatrix::column(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

std::vector<std::size_t> DenseMatrix::row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
        std::size_t r = pivot_row;
        while (r < rows_ && (*this)(r, c) == 0) ++r;
        if (r == rows_) continue;
        if (r != pivot_row)
            for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(r, k), (*this)(pivot_row, k));
        const Rational inv = 1 / (*this)(pivot_row, c);
        for (std::size_t k = c; k < cols_; ++k) (*this)(pivot_row, k) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == pivot_row || (*this)(i, c) == 0) continue;
            const Rational factor = (*this)(i, c);
            for (std::size_t k = c; k < cols_; ++k) (*this)(i, k) -= factor * (*this)(pivot_row, k);
        }
        pivots.push_back(c);
        ++pivot_row;
    }
    return pivots;
}

Rational determinant(DenseMatrix m) {
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && m(r, c) == 0) ++r;
        if (r == n) return 0;
        if (r != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(r, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Rational factor = m(i, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k) m(i, k) -= factor * m(c, k);
        }
    }
    return det;
}

std::size_t rank(DenseMatrix m) { return m.row_reduce().size(); }

std::vector<std::vector<Rational>> kernel_basis(DenseMatrix m) {
    const auto pivots = m.row_reduce();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const DenseMatrix& a, const std::vector<Rational>& b) {
    DenseMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const auto pivots = aug.row_reduce();
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<Rational> x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
    return x;
}

}  // namespace lefschetz::detail
