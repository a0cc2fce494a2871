#include "nilab/lie/series.hpp"

#include "nilab/errors.hpp"

namespace nilab::lie {

namespace {

// [L, rhs]: brackets of every basis vector e_a with every basis row of rhs.
Subspace bracket_with_whole(const StructureTensor& t, const Subspace& rhs) {
    linalg::EchelonForm form(t.dim());
    for (std::size_t b = 0; b < rhs.dim() && !form.full(); ++b) {
        const Vector v = rhs.basis_vector(b);
        for (std::size_t a = 0; a < t.dim() && !form.full(); ++a) form.insert(t.bracket_with_basis(a, v));
    }
    return form.to_subspace();
}

// span{[u, v] : u in lhs, v in rhs}, both given by basis rows.
Subspace bracket_span(const StructureTensor& t, const Subspace& lhs, const Subspace& rhs) {
    linalg::EchelonForm form(t.dim());
    for (std::size_t a = 0; a < lhs.dim() && !form.full(); ++a) {
        const Vector u = lhs.basis_vector(a);
        for (std::size_t b = 0; b < rhs.dim() && !form.full(); ++b) form.insert(t.bracket(u, rhs.basis_vector(b)));
    }
    return form.to_subspace();
}

SeriesReport descending(const StructureTensor& t, SeriesKind kind) {
    const Subspace whole = Subspace::whole(t.dim());
    SeriesReport out{kind, {whole}, {whole.dim()}, false};
    while (true) {
        const Subspace& last = out.terms.back();
        Subspace next = kind == SeriesKind::LowerCentral ? bracket_with_whole(t, last) : bracket_span(t, last, last);
        if (next == last) break;
        out.dims.push_back(next.dim());
        out.terms.push_back(std::move(next));
    }
    out.terminated = true;
    return out;
}

// {x : [x, e_j] in z for all j}: nullspace of x -> ([x, e_j] mod z)_j, with
// the residue read off the non-pivot coordinates of z.
Subspace center_modulo(const StructureTensor& t, const Subspace& z) {
    const std::size_t n = t.dim();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : z.pivot_cols()) is_pivot[p] = true;
    const std::size_t quotient_dim = n - z.dim();

    linalg::DenseMatrix system(n * quotient_dim, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const Vector image = z.reduce(t.bracket_basis(i, j));
            std::size_t q = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (is_pivot[k]) continue;
                system(j * quotient_dim + q, i) = image[k];
                ++q;
            }
        }
    return linalg::nullspace(system);
}

}  // namespace

std::string_view to_string(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::LowerCentral: return "lower-central";
        case SeriesKind::UpperCentral: return "upper-central";
        case SeriesKind::Derived: return "derived";
    }
    return "unknown";
}

SeriesReport lower_central_series(const StructureTensor& t) { return descending(t, SeriesKind::LowerCentral); }

SeriesReport derived_series(const StructureTensor& t) { return descending(t, SeriesKind::Derived); }

SeriesReport upper_central_series(const StructureTensor& t) {
    SeriesReport out{SeriesKind::UpperCentral, {Subspace(t.dim())}, {0}, false};
    while (true) {
        Subspace next = center_modulo(t, out.terms.back());
        if (next == out.terms.back()) break;
        out.dims.push_back(next.dim());
        out.terms.push_back(std::move(next));
    }
    out.terminated = true;
    return out;
}

Subspace center(const StructureTensor& t) { return center_modulo(t, Subspace(t.dim())); }

Nilpotency nilpotency(const SeriesReport& lower) {
    if (lower.kind != SeriesKind::LowerCentral) throw DomainError("nilpotency: expected a lower central series");
    if (!lower.terms.back().is_zero()) return {false, std::nullopt};
    std::size_t nonzero = 0;
    for (std::size_t d : lower.dims)
        if (d != 0) ++nonzero;
    return {true, nonzero};
}

Nilpotency nilpotency(const StructureTensor& t) { return nilpotency(lower_central_series(t)); }

std::size_t generators_count(const StructureTensor& t) {
    const SeriesReport lower = lower_central_series(t);
    if (!nilpotency(lower).is_nilpotent) throw DomainError("generators_count: algebra is not nilpotent");
    // The zero algebra has lower series [0] and no second term.
    const std::size_t commutant = lower.dims.size() > 1 ? lower.dims[1] : 0;
    return t.dim() - commutant;
}

bool is_filiform(const StructureTensor& t) {
    if (t.dim() < 2) return false;
    const auto nil = nilpotency(t);
    return nil.is_nilpotent && *nil.nilpotency_class == t.dim() - 1;
}

}  // namespace nilab::lie
