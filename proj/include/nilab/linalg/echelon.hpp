#pragma once

#include "nilab/linalg/matrix.hpp"
#include "nilab/linalg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace nilab::linalg {

class Subspace;

/// Reduced row-echelon basis that grows one vector at a time.
///
/// After every insert the stored rows are in RREF: each has a leading 1 at
/// its pivot column and zeros in every other row's pivot column. Reduction
/// of a candidate vector is therefore a single pass over its nonzero pivot
/// entries. Pivot choice is the first nonzero column of the residual.
class EchelonForm {
public:
    explicit EchelonForm(std::size_t width);

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == width_; }

    /// Residual of `v` modulo the current span (zero iff `v` is in the span).
    /// Its entries at pivot columns are always zero.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;

    /// Adds `v` to the spanning set. Returns true iff the rank grew.
    bool insert(Vector v);

    /// Canonical snapshot (rows sorted by pivot column).
    Subspace to_subspace() const;

private:
    static constexpr std::size_t kNoRow = static_cast<std::size_t>(-1);

    void check_width(const Vector& v) const;
    void reduce_in_place(Vector& v) const;

    std::size_t width_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivot_of_row_;
    std::vector<std::size_t> row_of_pivot_;
};

/// Linear subspace of K^d held as its unique RREF basis. Equal subspaces
/// have identical representations, so `==` is subspace equality.
class Subspace {
public:
    /// The zero subspace of K^d.
    explicit Subspace(std::size_t ambient_dim = 0);
    static Subspace whole(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return pivots_.size(); }
    bool is_zero() const { return pivots_.empty(); }

    const DenseMatrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

    bool contains(const Vector& v) const;
    /// Residual of `v` after clearing every pivot column with basis rows.
    Vector reduce(const Vector& v) const;
    /// Coefficients of `v` in the RREF basis, or nullopt if `v` is not in
    /// the subspace. For an RREF basis these are just the pivot entries of v.
    std::optional<Vector> coordinates(const Vector& v) const;
    /// Inverse of `coordinates`.
    Vector combine(std::span<const Scalar> coeffs) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    friend class EchelonForm;
    Subspace(std::size_t ambient_dim, DenseMatrix basis, std::vector<std::size_t> pivots);

    std::size_t ambient_dim_ = 0;
    DenseMatrix basis_;
    std::vector<std::size_t> pivots_;
};

struct RrefResult {
    DenseMatrix reduced;
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const { return pivot_cols.size(); }
};

/// Unique reduced row-echelon form of `m`, same shape as `m` (zero rows last).
RrefResult rref(const DenseMatrix& m);

/// {v : m v = 0} as a subspace of K^{cols(m)}.
Subspace nullspace(const DenseMatrix& m);
/// {v : r . v = 0 for every r in rows}; nullspace of any matrix whose row space is `rows`.
Subspace annihilator(const Subspace& rows);

/// Span of `vectors` in K^ambient_dim. Throws DimensionMismatch if any
/// vector has a different length.
Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim);
Subspace span(const DenseMatrix& rows);

Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersection(const Subspace& s, const Subspace& t);
bool is_subspace_of(const Subspace& s, const Subspace& t);
/// dim t - dim s. Throws ContainmentViolation unless s is contained in t.
std::size_t codim(const Subspace& s, const Subspace& t);

}  // namespace nilab::linalg
