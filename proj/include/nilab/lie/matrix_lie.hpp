#pragma once

#include "nilab/linalg/echelon.hpp"
#include "nilab/linalg/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace nilab::lie {

using linalg::DenseMatrix;
using linalg::Scalar;
using linalg::Subspace;
using linalg::Vector;

/// Number of strictly upper-triangular positions of an m x m matrix.
constexpr std::size_t upper_dim(std::size_t m) { return m * (m - (m > 0 ? 1 : 0)) / 2; }

/// Strictly upper-triangular entries in row-major (i, j), i < j order.
Vector flatten_upper(const DenseMatrix& a);
DenseMatrix unflatten_upper(const Vector& v, std::size_t order);

/// AB - BA.
DenseMatrix mat_bracket(const DenseMatrix& a, const DenseMatrix& b);

/// J_m(0): ones on the superdiagonal.
DenseMatrix jordan_block(std::size_t m);

/// Matrix unit E_ij (0-based indices) of order m.
DenseMatrix matrix_unit(std::size_t m, std::size_t i, std::size_t j);

/// Bracket-closed subspace of strictly upper-triangular m x m matrices.
///
/// The basis is canonical: its flattened rows are exactly the RREF basis of
/// `coords()`, so two algebras are equal iff they are the same subspace.
class MatrixLieAlgebra {
public:
    std::size_t order() const { return order_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<DenseMatrix>& basis() const { return basis_; }
    const Subspace& coords() const { return coords_; }

    bool contains(const DenseMatrix& a) const;

    friend bool operator==(const MatrixLieAlgebra&, const MatrixLieAlgebra&) = default;

private:
    friend MatrixLieAlgebra full_upper_nilpotent(std::size_t m);
    friend MatrixLieAlgebra generate_subalgebra(std::span<const DenseMatrix> gens);
    MatrixLieAlgebra(std::size_t order, Subspace coords);

    std::size_t order_;
    Subspace coords_;
    std::vector<DenseMatrix> basis_;
};

/// N_m: all strictly upper-triangular m x m matrices, basis E_ij in
/// flattening order. Throws InvalidOrder for m < 2.
MatrixLieAlgebra full_upper_nilpotent(std::size_t m);

/// Smallest bracket-closed subspace containing `gens`.
///
/// Worklist closure: each newly admitted element is bracketed against every
/// element admitted so far, and independent results join the worklist. The
/// admitted elements are Lie words in the generators (integer matrices for
/// integer input); only the final basis is brought to RREF.
///
/// Throws InvalidGenerator if a generator is not strictly upper triangular,
/// DimensionMismatch on non-square or mixed-order input or an empty list.
MatrixLieAlgebra generate_subalgebra(std::span<const DenseMatrix> gens);

}  // namespace nilab::lie
