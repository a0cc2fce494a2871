#pragma once

#include "nilab/lie/matrix_lie.hpp"
#include "nilab/linalg/echelon.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace nilab::lie {

/// Abstract Lie algebra in a fixed basis: [e_i, e_j] = sum_k c_ij^k e_k.
///
/// Only i < j is stored; c_ji^k = -c_ij^k and c_ii^k = 0 are implied.
class StructureTensor {
public:
    /// One nonzero coordinate of a basis bracket.
    struct Term {
        std::size_t index;
        Scalar value;
    };

    /// The abelian (all-zero) tensor of dimension n.
    explicit StructureTensor(std::size_t n = 0);
    /// `brackets[pair_index(i, j)]` is the coordinate vector of [e_i, e_j], i < j.
    StructureTensor(std::size_t n, std::vector<Vector> brackets);

    std::size_t dim() const { return dim_; }

    /// c_ij^k for any i, j (antisymmetry applied).
    Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;
    /// Coordinates of [e_i, e_j].
    Vector bracket_basis(std::size_t i, std::size_t j) const;
    /// Nonzero coordinates of [e_i, e_j] for i < j.
    const std::vector<Term>& terms(std::size_t i, std::size_t j) const { return sparse_[pair_index(i, j)]; }
    /// [e_a, v].
    Vector bracket_with_basis(std::size_t a, const Vector& v) const;
    /// [u, v] for coordinate vectors u, v.
    Vector bracket(const Vector& u, const Vector& v) const;

    bool is_abelian() const;

    std::size_t pair_index(std::size_t i, std::size_t j) const {
        return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
    }

    friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
        return a.dim_ == b.dim_ && a.dense_ == b.dense_;
    }

private:
    std::size_t dim_;
    std::vector<Vector> dense_;
    std::vector<std::vector<Term>> sparse_;
};

/// Constants of `l` in its canonical basis {B_i}: flatten([B_i, B_j]) =
/// sum_k c_ij^k flatten(B_k). Throws InvariantViolation if a bracket leaves
/// the span (a closure bug).
StructureTensor structure_tensor(const MatrixLieAlgebra& l);

/// True iff every Jacobi triple vanishes:
/// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 for all i < j < k.
bool jacobi_check(const StructureTensor& t);

/// Tensor of the subalgebra `s` in its RREF basis. Verifies [S, S] in S.
/// Throws DimensionMismatch if `s` is not a subspace of K^dim(t), and
/// NotASubalgebra if it is not bracket-closed.
StructureTensor restrict_to_subalgebra(const StructureTensor& t, const Subspace& s);

}  // namespace nilab::lie
