#include "nilab/lie/matrix_lie.hpp"

#include "nilab/errors.hpp"

#include <deque>
#include <string>

namespace nilab::lie {

Vector flatten_upper(const DenseMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("flatten_upper: matrix is not square");
    const std::size_t m = a.rows();
    Vector out;
    out.reserve(upper_dim(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) out.push_back(a(i, j));
    return out;
}

DenseMatrix unflatten_upper(const Vector& v, std::size_t order) {
    if (v.size() != upper_dim(order))
        throw DimensionMismatch("unflatten_upper: " + std::to_string(v.size()) + " coordinates for order " +
                                std::to_string(order));
    DenseMatrix out(order, order);
    std::size_t k = 0;
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = i + 1; j < order; ++j) out(i, j) = v[k++];
    return out;
}

DenseMatrix mat_bracket(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw DimensionMismatch("mat_bracket: operands must be square of equal order");
    return a * b - b * a;
}

DenseMatrix jordan_block(std::size_t m) {
    if (m == 0) throw InvalidOrder("jordan_block: order must be at least 1");
    DenseMatrix out(m, m);
    for (std::size_t i = 0; i + 1 < m; ++i) out(i, i + 1) = 1;
    return out;
}

DenseMatrix matrix_unit(std::size_t m, std::size_t i, std::size_t j) {
    if (i >= m || j >= m) throw DimensionMismatch("matrix_unit: index out of range");
    DenseMatrix out(m, m);
    out(i, j) = 1;
    return out;
}

MatrixLieAlgebra::MatrixLieAlgebra(std::size_t order, Subspace coords)
    : order_(order), coords_(std::move(coords)) {
    basis_.reserve(coords_.dim());
    for (std::size_t r = 0; r < coords_.dim(); ++r)
        basis_.push_back(unflatten_upper(coords_.basis_vector(r), order_));
}

bool MatrixLieAlgebra::contains(const DenseMatrix& a) const {
    if (!a.is_square() || a.rows() != order_) return false;
    return a.is_strictly_upper() && coords_.contains(flatten_upper(a));
}

MatrixLieAlgebra full_upper_nilpotent(std::size_t m) {
    if (m < 2) throw InvalidOrder("full_upper_nilpotent: order must be at least 2");
    return MatrixLieAlgebra(m, Subspace::whole(upper_dim(m)));
}

MatrixLieAlgebra generate_subalgebra(std::span<const DenseMatrix> gens) {
    if (gens.empty()) throw DimensionMismatch("generate_subalgebra: no generators");
    const std::size_t m = gens.front().rows();
    for (const auto& g : gens) {
        if (!g.is_square() || g.rows() != m)
            throw DimensionMismatch("generate_subalgebra: generators must be square of equal order");
        if (!g.is_strictly_upper())
            throw InvalidGenerator("generate_subalgebra: generator is not strictly upper triangular");
    }

    linalg::EchelonForm span(upper_dim(m));
    std::vector<DenseMatrix> admitted;
    std::deque<std::size_t> pending;
    auto admit = [&](DenseMatrix a) {
        if (span.insert(flatten_upper(a))) {
            admitted.push_back(std::move(a));
            pending.push_back(admitted.size() - 1);
        }
    };

    for (const auto& g : gens) admit(g);
    while (!pending.empty()) {
        const std::size_t fresh = pending.front();
        pending.pop_front();
        // `admitted` may grow inside the loop; brackets with later arrivals
        // are taken when those arrivals are processed.
        for (std::size_t other = 0; other < fresh && !span.full(); ++other)
            admit(mat_bracket(admitted[fresh], admitted[other]));
    }
    return MatrixLieAlgebra(m, span.to_subspace());
}

}  // namespace nilab::lie
