#pragma once

#include "nilab/lie/structure.hpp"

#include <cstddef>
#include <vector>

namespace nilab::lie {

/// Der(L) for an algebra L given by structure constants.
///
/// A derivation is stored as the n x n matrix D with D e_i = sum_k D(k, i) e_k.
/// The basis is canonical: flattened row-major, the matrices are the RREF
/// basis of the solution space `space`.
struct DerivationAlgebra {
    std::size_t base_dim = 0;
    Subspace space;
    std::vector<DenseMatrix> der_basis;
    /// Commutators [D_a, D_b] = D_a D_b - D_b D_a in the basis der_basis.
    StructureTensor tensor;

    std::size_t dim() const { return der_basis.size(); }
};

/// Row-major flattening of an n x n matrix into K^{n^2}.
Vector flatten_square(const DenseMatrix& d);
DenseMatrix unflatten_square(const Vector& v, std::size_t n);

/// D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j] for all i < j.
bool satisfies_leibniz(const StructureTensor& t, const DenseMatrix& d);

/// Solves the Leibniz system (n^2 unknowns, n equations per pair i < j)
/// exactly and records the commutator table of the solution space. Throws
/// InvariantViolation if the solution space is not closed under commutators.
DerivationAlgebra derivation_algebra(const StructureTensor& t);

struct CharNilpotency {
    /// Der(L) is nilpotent as a Lie algebra.
    bool verdict = false;
    std::size_t der_dim = 0;
    /// Every basis derivation is a nilpotent operator (D^n = 0). Computed
    /// from the matrices, independently of `verdict`.
    bool all_derivations_nilpotent_operators = false;
};

CharNilpotency is_characteristically_nilpotent(const DerivationAlgebra& der);
CharNilpotency is_characteristically_nilpotent(const StructureTensor& t);

/// D^k = 0 for some k <= order.
bool is_nilpotent_matrix(const DenseMatrix& d);

}  // namespace nilab::lie
