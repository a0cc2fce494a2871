#include "nilab/experiments/experiment.hpp"

#include "nilab/errors.hpp"
#include "nilab/experiments/analysis.hpp"
#include "nilab/lie/derivations.hpp"
#include "nilab/lie/matrix_lie.hpp"
#include "nilab/lie/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilab::experiments {

void validate(const ExperimentConfig& cfg) {
    if (cfg.m < 2 || cfg.m > 12) throw std::invalid_argument("m must be in 2..12");
    if (cfg.generator_count != 2 && cfg.generator_count != 3)
        throw std::invalid_argument("generator count must be 2 or 3");
    if (cfg.entry_bound < 1) throw std::invalid_argument("entry bound must be at least 1");
}

namespace {

template <class Seq>
void join(std::ostringstream& out, const Seq& values) {
    bool first = true;
    for (const auto& v : values) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
}

SubalgebraVerdict verdict_for(const lie::StructureTensor& sub) {
    const auto cn = lie::is_characteristically_nilpotent(sub);
    return {sub.dim(), cn.der_dim, cn.verdict};
}

}  // namespace

std::string make_fingerprint(const ExperimentReport& r) {
    std::ostringstream out;
    out << "m=" << r.config.m << ";gens=" << r.config.generator_count << ";dim=" << r.dim
        << ";class=" << r.nilpotency_class << ";lower=";
    join(out, r.lower_dims);
    out << ";upper=";
    join(out, r.upper_dims);
    out << ";derived=";
    join(out, r.derived_dims);
    out << ";center=" << r.center_dim << ";mingens=" << r.generators_count << ";der=" << r.der_dim << ':'
        << (r.der_nilpotent ? "nil" : "non") << ";commutant=" << r.commutant.dim << ':' << r.commutant.der_dim
        << ':' << (r.commutant.der_nilpotent ? "nil" : "non") << ";ideal=" << r.codim1_ideal.dim << ':'
        << r.codim1_ideal.der_dim << ':' << (r.codim1_ideal.der_nilpotent ? "nil" : "non");
    return out.str();
}

bool is_ideal(const lie::StructureTensor& t, const linalg::Subspace& s) {
    if (s.ambient_dim() != t.dim()) throw DimensionMismatch("is_ideal: subspace has the wrong ambient dimension");
    for (std::size_t r = 0; r < s.dim(); ++r) {
        const auto v = s.basis_vector(r);
        for (std::size_t a = 0; a < t.dim(); ++a)
            if (!s.contains(t.bracket_with_basis(a, v))) return false;
    }
    return true;
}

Codim1Ideal codim1_ideal(const lie::StructureTensor& t, std::vector<std::int64_t> coeffs) {
    const auto lower = lie::lower_central_series(t);
    if (!lie::nilpotency(lower).is_nilpotent) throw DomainError("codim1_ideal: algebra is not nilpotent");
    const std::size_t n = t.dim();
    const linalg::Subspace commutant = lower.dims.size() > 1 ? lower.terms[1] : linalg::Subspace(n);
    const std::size_t g = n - commutant.dim();
    if (g == 0) throw DomainError("codim1_ideal: algebra has no generators");
    if (coeffs.size() != g) throw DomainError("codim1_ideal: need one coefficient per generator");
    if (std::all_of(coeffs.begin(), coeffs.end(), [](auto c) { return c == 0; }))
        throw DomainError("codim1_ideal: functional is zero");

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : commutant.pivot_cols()) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    // phi(x) = sum_t a_t (x_{f_t} - sum_r x_{p_r} B(r, f_t)), written as one row.
    linalg::DenseMatrix functional(1, n);
    for (std::size_t q = 0; q < g; ++q) {
        const linalg::Scalar a(static_cast<long>(coeffs[q]));
        functional(0, free_cols[q]) += a;
        for (std::size_t r = 0; r < commutant.dim(); ++r)
            functional(0, commutant.pivot_cols()[r]) -= a * commutant.basis()(r, free_cols[q]);
    }
    Codim1Ideal out{linalg::nullspace(functional), std::move(coeffs)};
    if (!linalg::is_subspace_of(commutant, out.ideal) || out.ideal.dim() + 1 != n || !is_ideal(t, out.ideal))
        throw InvariantViolation("codim1_ideal: kernel is not a codimension-1 ideal containing [L,L]");
    return out;
}

Codim1Ideal codim1_random_ideal(const lie::StructureTensor& t, RngState& rng, std::int64_t bound) {
    const std::size_t g = lie::generators_count(t);
    if (g == 0) throw DomainError("codim1_random_ideal: algebra has no generators");
    std::vector<std::int64_t> coeffs(g);
    do {
        for (auto& c : coeffs) c = rand_int(rng, bound);
    } while (std::all_of(coeffs.begin(), coeffs.end(), [](auto c) { return c == 0; }));
    return codim1_ideal(t, std::move(coeffs));
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    RngState rng(cfg.seed);
    ExperimentReport r;
    r.config = cfg;
    r.generators.push_back(lie::jordan_block(cfg.m));
    for (std::size_t k = 1; k < cfg.generator_count; ++k)
        r.generators.push_back(random_generic_upper(cfg.m, rng, cfg.entry_bound, cfg.require_generic));

    const auto algebra = lie::generate_subalgebra(r.generators);
    const auto tensor = lie::structure_tensor(algebra);
    r.dim = tensor.dim();

    const auto lower = lie::lower_central_series(tensor);
    const auto upper = lie::upper_central_series(tensor);
    const auto derived = lie::derived_series(tensor);
    r.lower_dims = lower.dims;
    r.upper_dims = upper.dims;
    r.derived_dims = derived.dims;
    r.nilpotency_class = lie::nilpotency(lower).nilpotency_class.value_or(0);
    r.central_series_members_coincide = std::equal(upper.terms.begin(), upper.terms.end(), lower.terms.rbegin(),
                                                   lower.terms.rend());
    r.center_dim = lie::center(tensor).dim();
    r.generators_count = lie::generators_count(tensor);

    const auto der = lie::derivation_algebra(tensor);
    const auto cn = lie::is_characteristically_nilpotent(der);
    r.der_dim = cn.der_dim;
    r.der_nilpotent = cn.verdict;
    r.der_all_operators_nilpotent = cn.all_derivations_nilpotent_operators;

    const linalg::Subspace commutant = lower.dims.size() > 1 ? lower.terms[1] : linalg::Subspace(r.dim);
    r.commutant = verdict_for(lie::restrict_to_subalgebra(tensor, commutant));

    if (r.generators_count > 0) {
        const auto ideal = codim1_random_ideal(tensor, rng, cfg.entry_bound);
        const auto v = verdict_for(lie::restrict_to_subalgebra(tensor, ideal.ideal));
        r.codim1_ideal = {ideal.coefficients, v.dim, v.der_dim, v.der_nilpotent};
    }

    r.formula_expected = expected_dimension(cfg.m);
    r.formula_match = r.formula_expected == r.dim;
    r.fingerprint = make_fingerprint(r);
    return r;
}

std::string rigidity_obstruction(const ExperimentReport& report) {
    return report.codim1_ideal.der_nilpotent || report.generators_count == 0 ? kInconclusive : kNotRigid;
}

}  // namespace nilab::experiments
