#include "nilab/linalg/matrix.hpp"

#include "nilab/errors.hpp"

#include <algorithm>
#include <string>

namespace nilab::linalg {

namespace {

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch(std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        for (long x : r) entries_.emplace_back(x);
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

DenseMatrix DenseMatrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
    DenseMatrix out(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionMismatch("row " + std::to_string(r) + " has length " +
                                    std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
        std::copy(rows[r].begin(), rows[r].end(), out.row(r).begin());
    }
    return out;
}

Vector DenseMatrix::row_vector(std::size_t r) const {
    auto view = row(r);
    return {view.begin(), view.end()};
}

bool DenseMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool DenseMatrix::is_strictly_upper() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j <= i && j < cols_; ++j)
            if (sgn((*this)(i, j)) != 0) return false;
    return true;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

DenseMatrix DenseMatrix::pow(unsigned k) const {
    if (!is_square()) throw DimensionMismatch("pow of a non-square matrix");
    DenseMatrix out = identity(rows_);
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b, "operator+");
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b, "operator-");
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

// Skips zero entries of the left factor; the matrices here are mostly sparse.
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("operator*: inner dimensions " + std::to_string(a.cols()) + " and " +
                                std::to_string(b.rows()));
    DenseMatrix out(a.rows(), b.cols());
    Scalar t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (sgn(b(k, j)) == 0) continue;
                t = aik * b(k, j);
                out(i, j) += t;
            }
        }
    return out;
}

DenseMatrix operator*(const Scalar& s, const DenseMatrix& a) {
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
    return out;
}

Vector operator*(const DenseMatrix& a, const Vector& v) {
    if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector product: length mismatch");
    Vector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
    return out;
}

}  // namespace nilab::linalg
