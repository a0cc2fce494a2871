#include "nilab/lie/derivations.hpp"

#include "nilab/errors.hpp"
#include "nilab/lie/series.hpp"

#include <string>

namespace nilab::lie {

namespace {

struct Entry {
    std::size_t k;
    Scalar value;
};

// right[j][l] lists (k, c_kj^l) over the nonzero constants.
std::vector<std::vector<std::vector<Entry>>> right_action_table(const StructureTensor& t) {
    const std::size_t n = t.dim();
    std::vector<std::vector<std::vector<Entry>>> right(n, std::vector<std::vector<Entry>>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (const auto& term : t.terms(a, b)) {
                right[b][term.index].push_back({a, term.value});
                right[a][term.index].push_back({b, -term.value});
            }
    return right;
}

}  // namespace

Vector flatten_square(const DenseMatrix& d) {
    if (!d.is_square()) throw DimensionMismatch("flatten_square: matrix is not square");
    return d.entries();
}

DenseMatrix unflatten_square(const Vector& v, std::size_t n) {
    if (v.size() != n * n) throw DimensionMismatch("unflatten_square: length is not n^2");
    DenseMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = v[r * n + c];
    return out;
}

bool satisfies_leibniz(const StructureTensor& t, const DenseMatrix& d) {
    const std::size_t n = t.dim();
    if (d.rows() != n || d.cols() != n) throw DimensionMismatch("satisfies_leibniz: operator has wrong size");
    std::vector<Vector> image(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) image[i][k] = d(k, i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector lhs = d * t.bracket_basis(i, j);
            Vector rhs = t.bracket_with_basis(j, image[i]);
            for (auto& x : rhs) x = -x;  // [D e_i, e_j] = -[e_j, D e_i]
            const Vector second = t.bracket_with_basis(i, image[j]);
            for (std::size_t k = 0; k < n; ++k) rhs[k] += second[k];
            if (lhs != rhs) return false;
        }
    return true;
}

DerivationAlgebra derivation_algebra(const StructureTensor& t) {
    const std::size_t n = t.dim();
    const std::size_t unknowns = n * n;
    const auto right = right_action_table(t);
    auto var = [n](std::size_t row, std::size_t col) { return row * n + col; };

    // Equation (i, j, l): sum_k c_ij^k D(l,k) - sum_k c_kj^l D(k,i) - sum_k c_ik^l D(k,j) = 0,
    // the e_l coordinate of D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j].
    linalg::EchelonForm equations(unknowns);
    Vector row(unknowns);
    for (std::size_t i = 0; i < n && !equations.full(); ++i)
        for (std::size_t j = i + 1; j < n && !equations.full(); ++j)
            for (std::size_t l = 0; l < n; ++l) {
                for (auto& x : row) x = 0;
                bool any = false;
                for (const auto& term : t.terms(i, j)) {
                    row[var(l, term.index)] += term.value;
                    any = true;
                }
                for (const auto& e : right[j][l]) {
                    row[var(e.k, i)] -= e.value;
                    any = true;
                }
                // c_ik^l = -c_ki^l
                for (const auto& e : right[i][l]) {
                    row[var(e.k, j)] += e.value;
                    any = true;
                }
                if (any) equations.insert(row);
            }

    DerivationAlgebra out;
    out.base_dim = n;
    out.space = linalg::annihilator(equations.to_subspace());
    out.der_basis.reserve(out.space.dim());
    for (std::size_t r = 0; r < out.space.dim(); ++r)
        out.der_basis.push_back(unflatten_square(out.space.basis_vector(r), n));

    const std::size_t d = out.der_basis.size();
    std::vector<Vector> brackets;
    brackets.reserve(d * (d - (d > 0 ? 1 : 0)) / 2);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            auto coords = out.space.coordinates(flatten_square(mat_bracket(out.der_basis[a], out.der_basis[b])));
            if (!coords)
                throw InvariantViolation("derivation_algebra: commutator of basis derivations " + std::to_string(a) +
                                         ", " + std::to_string(b) + " is not a derivation");
            brackets.push_back(std::move(*coords));
        }
    out.tensor = StructureTensor(d, std::move(brackets));
    return out;
}

bool is_nilpotent_matrix(const DenseMatrix& d) {
    if (!d.is_square()) throw DimensionMismatch("is_nilpotent_matrix: matrix is not square");
    DenseMatrix power = d;
    for (std::size_t k = 1; k <= d.rows(); ++k) {
        if (power.is_zero()) return true;
        power = power * d;
    }
    return power.is_zero();
}

CharNilpotency is_characteristically_nilpotent(const DerivationAlgebra& der) {
    CharNilpotency out;
    out.der_dim = der.dim();
    out.verdict = nilpotency(der.tensor).is_nilpotent;
    out.all_derivations_nilpotent_operators = true;
    for (const auto& d : der.der_basis)
        if (!is_nilpotent_matrix(d)) {
            out.all_derivations_nilpotent_operators = false;
            break;
        }
    return out;
}

CharNilpotency is_characteristically_nilpotent(const StructureTensor& t) {
    return is_characteristically_nilpotent(derivation_algebra(t));
}

}  // namespace nilab::lie
