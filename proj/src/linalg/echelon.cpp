#include "nilab/linalg/echelon.hpp"

#include "nilab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nilab::linalg {

namespace {

// v -= factor * row, touching only the support of `row` from column `from`.
void subtract_multiple(Vector& v, const Scalar& factor, const Vector& row, std::size_t from) {
    Scalar t;
    for (std::size_t j = from; j < row.size(); ++j) {
        if (sgn(row[j]) == 0) continue;
        t = factor * row[j];
        v[j] -= t;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// EchelonForm

EchelonForm::EchelonForm(std::size_t width) : width_(width), row_of_pivot_(width, kNoRow) {}

void EchelonForm::check_width(const Vector& v) const {
    if (v.size() != width_)
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in K^" +
                                std::to_string(width_));
}

void EchelonForm::reduce_in_place(Vector& v) const {
    Scalar factor;
    for (std::size_t c = 0; c < width_; ++c) {
        if (sgn(v[c]) == 0 || row_of_pivot_[c] == kNoRow) continue;
        factor = v[c];
        // Rows are zero left of their pivot and at every other pivot column,
        // so later pivot entries of v are not disturbed.
        subtract_multiple(v, factor, rows_[row_of_pivot_[c]], c);
    }
}

Vector EchelonForm::reduce(Vector v) const {
    check_width(v);
    reduce_in_place(v);
    return v;
}

bool EchelonForm::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool EchelonForm::insert(Vector v) {
    check_width(v);
    if (full()) return false;
    reduce_in_place(v);
    auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) != 0; });
    if (lead == v.end()) return false;
    const auto p = static_cast<std::size_t>(lead - v.begin());

    const Scalar inv = 1 / v[p];
    for (std::size_t j = p; j < width_; ++j)
        if (sgn(v[j]) != 0) v[j] *= inv;

    Scalar factor;
    for (auto& row : rows_) {
        if (sgn(row[p]) == 0) continue;
        factor = row[p];
        subtract_multiple(row, factor, v, p);
    }
    row_of_pivot_[p] = rows_.size();
    pivot_of_row_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
}

Subspace EchelonForm::to_subspace() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivot_of_row_[a] < pivot_of_row_[b]; });
    DenseMatrix basis(rows_.size(), width_);
    std::vector<std::size_t> pivots;
    pivots.reserve(rows_.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        std::copy(rows_[order[r]].begin(), rows_[order[r]].end(), basis.row(r).begin());
        pivots.push_back(pivot_of_row_[order[r]]);
    }
    return Subspace(width_, std::move(basis), std::move(pivots));
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, DenseMatrix basis, std::vector<std::size_t> pivots)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::whole(std::size_t ambient_dim) {
    std::vector<std::size_t> pivots(ambient_dim);
    std::iota(pivots.begin(), pivots.end(), std::size_t{0});
    return Subspace(ambient_dim, DenseMatrix::identity(ambient_dim), std::move(pivots));
}

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_dim_)
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in K^" +
                                std::to_string(ambient_dim_));
    Vector out = v;
    Scalar factor, t;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (sgn(out[p]) == 0) continue;
        factor = out[p];
        for (std::size_t j = p; j < ambient_dim_; ++j) {
            const Scalar& b = basis_(r, j);
            if (sgn(b) == 0) continue;
            t = factor * b;
            out[j] -= t;
        }
    }
    return out;
}

bool Subspace::contains(const Vector& v) const { return linalg::is_zero(reduce(v)); }

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) return std::nullopt;
    Vector coeffs;
    coeffs.reserve(pivots_.size());
    for (std::size_t p : pivots_) coeffs.push_back(v[p]);
    return coeffs;
}

Vector Subspace::combine(std::span<const Scalar> coeffs) const {
    if (coeffs.size() != dim()) throw DimensionMismatch("coefficient count differs from subspace dimension");
    Vector out(ambient_dim_);
    Scalar t;
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
        if (sgn(coeffs[r]) == 0) continue;
        for (std::size_t j = 0; j < ambient_dim_; ++j) {
            if (sgn(basis_(r, j)) == 0) continue;
            t = coeffs[r] * basis_(r, j);
            out[j] += t;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Free functions

RrefResult rref(const DenseMatrix& m) {
    EchelonForm form(m.cols());
    for (std::size_t r = 0; r < m.rows() && !form.full(); ++r) form.insert(m.row_vector(r));
    const Subspace rows = form.to_subspace();
    RrefResult out{DenseMatrix(m.rows(), m.cols()), rows.pivot_cols()};
    for (std::size_t r = 0; r < rows.dim(); ++r) {
        auto src = rows.basis().row(r);
        std::copy(src.begin(), src.end(), out.reduced.row(r).begin());
    }
    return out;
}

Subspace annihilator(const Subspace& rows) {
    const std::size_t n = rows.ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rows.pivot_cols()) is_pivot[p] = true;

    std::vector<Vector> kernel;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < rows.dim(); ++r) v[rows.pivot_cols()[r]] = -rows.basis()(r, f);
        kernel.push_back(std::move(v));
    }
    return span(kernel, n);
}

Subspace nullspace(const DenseMatrix& m) { return annihilator(span(m)); }

Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim) {
    EchelonForm form(ambient_dim);
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim)
            throw DimensionMismatch("span: vector of length " + std::to_string(v.size()) + " in K^" +
                                    std::to_string(ambient_dim));
        if (!form.full()) form.insert(v);
    }
    return form.to_subspace();
}

Subspace span(const DenseMatrix& rows) {
    EchelonForm form(rows.cols());
    for (std::size_t r = 0; r < rows.rows() && !form.full(); ++r) form.insert(rows.row_vector(r));
    return form.to_subspace();
}

namespace {

void require_same_ambient(const Subspace& s, const Subspace& t, const char* op) {
    if (s.ambient_dim() != t.ambient_dim())
        throw DimensionMismatch(std::string(op) + ": ambient dimensions " + std::to_string(s.ambient_dim()) +
                                " and " + std::to_string(t.ambient_dim()));
}

}  // namespace

Subspace sum(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "sum");
    EchelonForm form(s.ambient_dim());
    for (std::size_t r = 0; r < s.dim(); ++r) form.insert(s.basis_vector(r));
    for (std::size_t r = 0; r < t.dim(); ++r) form.insert(t.basis_vector(r));
    return form.to_subspace();
}

// Kernel of (a, b) -> sum a_i s_i - sum b_j t_j, mapped back through the s part.
Subspace intersection(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "intersection");
    const std::size_t d = s.ambient_dim();
    DenseMatrix m(d, s.dim() + t.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < d; ++j) m(j, i) = s.basis()(i, j);
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < d; ++j) m(j, s.dim() + i) = -t.basis()(i, j);
    const Subspace kernel = nullspace(m);
    std::vector<Vector> vectors;
    for (std::size_t r = 0; r < kernel.dim(); ++r) {
        auto row = kernel.basis().row(r);
        vectors.push_back(s.combine(row.first(s.dim())));
    }
    return span(vectors, d);
}

bool is_subspace_of(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "is_subspace_of");
    for (std::size_t r = 0; r < s.dim(); ++r)
        if (!t.contains(s.basis_vector(r))) return false;
    return true;
}

std::size_t codim(const Subspace& s, const Subspace& t) {
    if (!is_subspace_of(s, t))
        throw ContainmentViolation("codim: first subspace (dim " + std::to_string(s.dim()) +
                                   ") is not contained in the second (dim " + std::to_string(t.dim()) + ")");
    return t.dim() - s.dim();
}

}  // namespace nilab::linalg
