#pragma once

#include "nilab/linalg/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace nilab::linalg {

/// Row-major matrix of exact rationals.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    /// Integer literal rows, e.g. `DenseMatrix{{2, 4}, {1, 2}}`. Rows must
    /// all have the same length.
    DenseMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static DenseMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static DenseMatrix identity(std::size_t n);
    /// Builds a matrix whose rows are `rows`; throws DimensionMismatch if ragged.
    static DenseMatrix from_rows(std::span<const Vector> rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;

    const std::vector<Scalar>& entries() const { return entries_; }

    bool is_zero() const;
    /// a_ij = 0 whenever i >= j.
    bool is_strictly_upper() const;

    DenseMatrix transpose() const;
    DenseMatrix pow(unsigned k) const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(const Scalar& s, const DenseMatrix& a);
Vector operator*(const DenseMatrix& a, const Vector& v);

}  // namespace nilab::linalg
