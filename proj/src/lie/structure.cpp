#include "nilab/lie/structure.hpp"

#include "nilab/errors.hpp"

#include <string>

namespace nilab::lie {

StructureTensor::StructureTensor(std::size_t n)
    : dim_(n), dense_(n * (n - (n > 0 ? 1 : 0)) / 2, Vector(n)), sparse_(dense_.size()) {}

StructureTensor::StructureTensor(std::size_t n, std::vector<Vector> brackets)
    : dim_(n), dense_(std::move(brackets)) {
    if (dense_.size() != n * (n - (n > 0 ? 1 : 0)) / 2)
        throw DimensionMismatch("StructureTensor: expected " + std::to_string(n * (n - (n > 0 ? 1 : 0)) / 2) +
                                " brackets, got " + std::to_string(dense_.size()));
    sparse_.resize(dense_.size());
    for (std::size_t p = 0; p < dense_.size(); ++p) {
        if (dense_[p].size() != n) throw DimensionMismatch("StructureTensor: bracket of wrong length");
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(dense_[p][k]) != 0) sparse_[p].push_back({k, dense_[p][k]});
    }
}

Scalar StructureTensor::constant(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == j) return 0;
    if (i < j) return dense_[pair_index(i, j)][k];
    return -dense_[pair_index(j, i)][k];
}

Vector StructureTensor::bracket_basis(std::size_t i, std::size_t j) const {
    if (i == j) return Vector(dim_);
    if (i < j) return dense_[pair_index(i, j)];
    Vector out = dense_[pair_index(j, i)];
    for (auto& x : out) x = -x;
    return out;
}

Vector StructureTensor::bracket_with_basis(std::size_t a, const Vector& v) const {
    if (a >= dim_ || v.size() != dim_) throw DimensionMismatch("bracket_with_basis: index or length mismatch");
    Vector out(dim_);
    Scalar t;
    for (std::size_t j = 0; j < dim_; ++j) {
        if (j == a || sgn(v[j]) == 0) continue;
        const bool flip = j < a;
        for (const auto& term : sparse_[flip ? pair_index(j, a) : pair_index(a, j)]) {
            t = v[j] * term.value;
            if (flip)
                out[term.index] -= t;
            else
                out[term.index] += t;
        }
    }
    return out;
}

Vector StructureTensor::bracket(const Vector& u, const Vector& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw DimensionMismatch("bracket: vector length mismatch");
    Vector out(dim_);
    Scalar coeff, t;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const auto& ts = sparse_[pair_index(i, j)];
            if (ts.empty()) continue;
            const bool a = sgn(u[i]) != 0 && sgn(v[j]) != 0;
            const bool b = sgn(u[j]) != 0 && sgn(v[i]) != 0;
            if (!a && !b) continue;
            coeff = 0;
            if (a) coeff = u[i] * v[j];
            if (b) coeff -= u[j] * v[i];
            if (sgn(coeff) == 0) continue;
            for (const auto& term : ts) {
                t = coeff * term.value;
                out[term.index] += t;
            }
        }
    }
    return out;
}

bool StructureTensor::is_abelian() const {
    for (const auto& ts : sparse_)
        if (!ts.empty()) return false;
    return true;
}

StructureTensor structure_tensor(const MatrixLieAlgebra& l) {
    const std::size_t n = l.dim();
    std::vector<Vector> brackets;
    brackets.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto coords = l.coords().coordinates(flatten_upper(mat_bracket(l.basis()[i], l.basis()[j])));
            if (!coords)
                throw InvariantViolation("structure_tensor: bracket of basis elements " + std::to_string(i) +
                                         ", " + std::to_string(j) + " leaves the algebra");
            brackets.push_back(std::move(*coords));
        }
    return StructureTensor(n, std::move(brackets));
}

namespace {

// acc += sign * [[e_i, e_j], e_k], expanded over the nonzero terms of [e_i, e_j].
void add_double_bracket(const StructureTensor& t, std::size_t i, std::size_t j, std::size_t k, int sign,
                        Vector& acc) {
    const std::size_t a = std::min(i, j);
    const std::size_t b = std::max(i, j);
    if (i > j) sign = -sign;
    Scalar prod;
    for (const auto& outer : t.terms(a, b)) {
        const std::size_t s = outer.index;
        if (s == k) continue;
        const int inner_sign = s < k ? sign : -sign;
        for (const auto& inner : t.terms(std::min(s, k), std::max(s, k))) {
            prod = outer.value * inner.value;
            if (inner_sign > 0)
                acc[inner.index] += prod;
            else
                acc[inner.index] -= prod;
        }
    }
}

}  // namespace

bool jacobi_check(const StructureTensor& t) {
    const std::size_t n = t.dim();
    Vector acc(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                for (auto& x : acc) x = 0;
                add_double_bracket(t, i, j, k, 1, acc);
                add_double_bracket(t, j, k, i, 1, acc);
                add_double_bracket(t, k, i, j, 1, acc);
                if (!linalg::is_zero(acc)) return false;
            }
    return true;
}

StructureTensor restrict_to_subalgebra(const StructureTensor& t, const Subspace& s) {
    if (s.ambient_dim() != t.dim())
        throw DimensionMismatch("restrict_to_subalgebra: subspace of K^" + std::to_string(s.ambient_dim()) +
                                " in an algebra of dimension " + std::to_string(t.dim()));
    const std::size_t d = s.dim();
    std::vector<Vector> basis;
    basis.reserve(d);
    for (std::size_t r = 0; r < d; ++r) basis.push_back(s.basis_vector(r));

    std::vector<Vector> brackets;
    brackets.reserve(d * (d - (d > 0 ? 1 : 0)) / 2);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            auto coords = s.coordinates(t.bracket(basis[a], basis[b]));
            if (!coords) throw NotASubalgebra("restrict_to_subalgebra: subspace is not closed under the bracket");
            brackets.push_back(std::move(*coords));
        }
    return StructureTensor(d, std::move(brackets));
}

}  // namespace nilab::lie
