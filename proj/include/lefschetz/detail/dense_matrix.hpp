#ifndef LEFSCHETZ_DETAIL_DENSE_MATRIX_HPP
#define LEFSCHETZ_DETAIL_DENSE_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "lefschetz/rational.hpp"

namespace lefschetz::detail {

// Row-major exact matrix for the small eliminations behind homology,
// orientation determinants and fixed-point systems.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> column(std::size_t c) const;

    // In-place reduced row echelon form; returns the pivot columns in order.
    std::vector<std::size_t> row_reduce();

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Rational determinant(DenseMatrix m);

std::size_t rank(DenseMatrix m);

// Basis of the null space, one vector per free column of the RREF, with a 1
// in that free coordinate.
std::vector<std::vector<Rational>> kernel_basis(DenseMatrix m);

// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const DenseMatrix& a, const std::vector<Rational>& b);

}  // namespace lefschetz::detail

#endif
