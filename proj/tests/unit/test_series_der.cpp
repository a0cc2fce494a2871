#include "nilab/errors.hpp"
#include "nilab/lie/derivations.hpp"
#include "nilab/lie/matrix_lie.hpp"
#include "nilab/lie/series.hpp"
#include "nilab/lie/structure.hpp"
#include "support/lie_fixtures.hpp"
#include "support/lie_oracles.hpp"

#include <doctest.h>

#include <random>

using namespace nilab;
using namespace nilab::lie;

namespace {

using Dims = std::vector<std::size_t>;

// Nilpotent tensors drawn from random matrix subalgebras, plus N_m.
std::vector<StructureTensor> sample_tensors(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::vector<StructureTensor> out;
    for (std::size_t m = 2; m <= 5; ++m) out.push_back(structure_tensor(full_upper_nilpotent(m)));
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t m = 3 + i % 4;
        std::vector<DenseMatrix> gens{oracle::random_strictly_upper(rng, m, 2), oracle::random_strictly_upper(rng, m, 2)};
        if (i % 3 == 0) gens[0] = jordan_block(m);
        out.push_back(structure_tensor(generate_subalgebra(gens)));
    }
    return out;
}

// [e0, e1] = e1: the smallest non-nilpotent algebra.
StructureTensor affine_line() { return fixture::tensor(2, {{0, 1, 1, 1}}); }

bool bracket_inside(const StructureTensor& t, const Subspace& a, const Subspace& b, const Subspace& target) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            if (!target.contains(t.bracket(a.basis_vector(i), b.basis_vector(j)))) return false;
    return true;
}

}  // namespace

TEST_CASE("jacobi_check") {
    // [e0, e1] = e2, [e0, e2] = e0: the cyclic sum on (e0, e1, e2) is -e2.
    const auto bad = fixture::tensor(3, {{0, 1, 2, 1}, {0, 2, 0, 1}});
    CHECK_FALSE(jacobi_check(bad));
    CHECK(oracle::jacobiator(bad, 0, 1, 2) == Vector{0, 0, -1});
    // [e0, e1] = e2, [e0, e2] = e1 is a genuine Lie algebra: ad e0 swaps the
    // abelian pair (e1, e2).
    const auto swap = fixture::tensor(3, {{0, 1, 2, 1}, {0, 2, 1, 1}});
    CHECK(jacobi_check(swap));
    CHECK(linalg::is_zero(oracle::jacobiator(swap, 0, 1, 2)));
    CHECK(jacobi_check(fixture::heisenberg()));
    CHECK(jacobi_check(StructureTensor(4)));
    for (const auto& t : sample_tensors(5, 12)) {
        CHECK(jacobi_check(t));
        for (std::size_t i = 0; i < t.dim(); ++i)
            for (std::size_t j = i + 1; j < t.dim(); ++j)
                for (std::size_t k = j + 1; k < t.dim(); ++k) CHECK(linalg::is_zero(oracle::jacobiator(t, i, j, k)));
    }
    // Agreement with the oracle on the failing example.
    CHECK_FALSE(linalg::is_zero(oracle::jacobiator(bad, 0, 1, 2)));
}

TEST_CASE("series examples") {
    const auto h = fixture::heisenberg();
    CHECK(lower_central_series(h).dims == Dims{3, 1, 0});
    CHECK(upper_central_series(h).dims == Dims{0, 1, 3});
    CHECK(derived_series(h).dims == Dims{3, 1, 0});
    CHECK(nilpotency(h).nilpotency_class == 2u);
    CHECK(center(h).dim() == 1);
    CHECK(center(h).contains(Vector{0, 0, 1}));

    const auto n4 = structure_tensor(full_upper_nilpotent(4));
    CHECK(lower_central_series(n4).dims == Dims{6, 3, 1, 0});
    CHECK(upper_central_series(n4).dims == Dims{0, 1, 3, 6});

    const auto ab = StructureTensor(1);
    CHECK(nilpotency(ab).is_nilpotent);
    CHECK(nilpotency(ab).nilpotency_class == 1u);
    CHECK(lower_central_series(StructureTensor(2)).dims == Dims{2, 0});
    CHECK(generators_count(StructureTensor(2)) == 2);

    const auto aff = affine_line();
    const auto lower = lower_central_series(aff);
    CHECK(lower.dims == Dims{2, 1});
    CHECK(lower.terminated);
    CHECK_FALSE(nilpotency(aff).is_nilpotent);
    CHECK_FALSE(nilpotency(aff).nilpotency_class.has_value());
    CHECK(upper_central_series(aff).dims == Dims{0});
    CHECK(derived_series(aff).dims == Dims{2, 1, 0});
    CHECK_THROWS_AS(generators_count(aff), DomainError);
}

TEST_CASE("filiform and generator counts") {
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto t = fixture::standard_filiform(n);
        CHECK(is_filiform(t));
        CHECK(generators_count(t) == 2);
        CHECK(nilpotency(t).nilpotency_class == n - 1);
    }
    CHECK_FALSE(is_filiform(structure_tensor(full_upper_nilpotent(4))));
    CHECK(generators_count(structure_tensor(full_upper_nilpotent(5))) == 4);
}

TEST_CASE("series invariants on sampled algebras") {
    for (const auto& t : sample_tensors(11, 24)) {
        const auto lower = lower_central_series(t);
        const auto upper = upper_central_series(t);
        const auto derived = derived_series(t);
        REQUIRE(nilpotency(lower).is_nilpotent);
        const std::size_t c = *nilpotency(lower).nilpotency_class;
        CAPTURE(lower.dims);

        // Strictly monotone, terminate at 0 / L.
        for (std::size_t i = 1; i < lower.terms.size(); ++i) {
            CHECK(linalg::is_subspace_of(lower.terms[i], lower.terms[i - 1]));
            CHECK(lower.dims[i] < lower.dims[i - 1]);
        }
        CHECK(lower.dims.back() == 0);
        for (std::size_t i = 1; i < upper.terms.size(); ++i) CHECK(linalg::is_subspace_of(upper.terms[i - 1], upper.terms[i]));
        CHECK(upper.dims.back() == t.dim());

        // Both central series have length c.
        CHECK(upper.terms.size() == c + 1);
        // [C^i, C^j] in C^{i+j}.
        for (std::size_t i = 0; i < lower.terms.size(); ++i)
            for (std::size_t j = 0; j < lower.terms.size(); ++j) {
                const std::size_t target = std::min(i + j + 1, lower.terms.size() - 1);
                CHECK(bracket_inside(t, lower.terms[i], lower.terms[j], lower.terms[target]));
            }
        // C^{c+1-i} inside Z_i.
        for (std::size_t i = 0; i <= c; ++i) CHECK(linalg::is_subspace_of(lower.terms[c - i], upper.terms[i]));
        // [Z_{i+1}, L] in Z_i.
        const auto whole = Subspace::whole(t.dim());
        for (std::size_t i = 0; i + 1 < upper.terms.size(); ++i)
            CHECK(bracket_inside(t, upper.terms[i + 1], whole, upper.terms[i]));
        // D^k in C^{2^k}; D^1 = C^2; Z_1 = center.
        for (std::size_t k = 0; k < derived.terms.size(); ++k) {
            const std::size_t idx = std::min<std::size_t>((std::size_t{1} << k) - 1, lower.terms.size() - 1);
            CHECK(linalg::is_subspace_of(derived.terms[k], lower.terms[idx]));
        }
        if (lower.terms.size() > 1 && derived.terms.size() > 1) CHECK(derived.terms[1] == lower.terms[1]);
        if (upper.terms.size() > 1) CHECK(upper.terms[1] == center(t));
        CHECK(generators_count(t) == t.dim() - (lower.dims.size() > 1 ? lower.dims[1] : 0));
    }
}

TEST_CASE("restrict_to_subalgebra") {
    const auto n4 = structure_tensor(full_upper_nilpotent(4));
    CHECK(restrict_to_subalgebra(n4, Subspace(6)).dim() == 0);
    CHECK(restrict_to_subalgebra(n4, Subspace::whole(6)) == n4);

    const auto lower = lower_central_series(n4);
    const auto sub = restrict_to_subalgebra(n4, lower.terms[1]);
    CHECK(sub.dim() == 3);
    CHECK(jacobi_check(sub));

    // E12 and E23 do not span a subalgebra.
    const auto bad = linalg::span(std::vector<Vector>{{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}}, 6);
    CHECK_THROWS_AS(restrict_to_subalgebra(n4, bad), NotASubalgebra);
    CHECK_THROWS_AS(restrict_to_subalgebra(n4, Subspace(5)), DimensionMismatch);

    // Restricted constants reproduce brackets of the ambient algebra.
    const auto s = lower.terms[1];
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            Vector rebuilt(6);
            for (std::size_t k = 0; k < s.dim(); ++k)
                for (std::size_t x = 0; x < 6; ++x) rebuilt[x] += sub.constant(i, j, k) * s.basis_vector(k)[x];
            CHECK(rebuilt == n4.bracket(s.basis_vector(i), s.basis_vector(j)));
        }
}

TEST_CASE("derivations of the Heisenberg algebra") {
    const auto h = fixture::heisenberg();
    const auto der = derivation_algebra(h);
    CHECK(der.dim() == 6);

    // Free images of e0 and e1; the one constraint forces D e2 = (a + f) e2.
    std::vector<Vector> family;
    for (std::size_t p = 0; p < 6; ++p) {
        Vector params(6);
        params[p] = 1;
        DenseMatrix d(3, 3);
        d(0, 0) = params[0];
        d(1, 0) = params[1];
        d(2, 0) = params[2];
        d(0, 1) = params[3];
        d(1, 1) = params[4];
        d(2, 1) = params[5];
        d(2, 2) = params[0] + params[4];
        CHECK(oracle::is_derivation(h, d));
        family.push_back(flatten_square(d));
    }
    CHECK(linalg::span(family, 9) == der.space);

    DenseMatrix wrong(3, 3);
    wrong(0, 0) = 1;
    CHECK_FALSE(satisfies_leibniz(h, wrong));
    CHECK_FALSE(oracle::is_derivation(h, wrong));

    const auto verdict = is_characteristically_nilpotent(der);
    CHECK_FALSE(verdict.verdict);
    CHECK_FALSE(verdict.all_derivations_nilpotent_operators);
}

TEST_CASE("derivations of abelian algebras") {
    const auto der = derivation_algebra(StructureTensor(2));
    CHECK(der.dim() == 4);
    const auto verdict = is_characteristically_nilpotent(der);
    CHECK_FALSE(verdict.verdict);
    CHECK(verdict.der_dim == 4);
    CHECK_FALSE(verdict.all_derivations_nilpotent_operators);
    CHECK(derivation_algebra(StructureTensor(0)).dim() == 0);
}

TEST_CASE("derivation algebra agrees with the naive Leibniz rank") {
    std::vector<StructureTensor> cases = sample_tensors(29, 18);
    cases.push_back(fixture::heisenberg());
    cases.push_back(affine_line());
    for (std::size_t n = 3; n <= 6; ++n) cases.push_back(fixture::standard_filiform(n));
    for (const auto& t : cases) {
        CAPTURE(t.dim());
        const auto der = derivation_algebra(t);
        CHECK(der.dim() == oracle::derivation_dim(t));
        for (const auto& d : der.der_basis) {
            CHECK(oracle::is_derivation(t, d));
            CHECK(satisfies_leibniz(t, d));
        }
        // Commutators of derivations are derivations and the tensor records them.
        CHECK(jacobi_check(der.tensor));
        for (std::size_t a = 0; a < der.dim(); ++a)
            for (std::size_t b = a + 1; b < der.dim(); ++b) {
                const auto comm = der.der_basis[a] * der.der_basis[b] - der.der_basis[b] * der.der_basis[a];
                CHECK(oracle::is_derivation(t, comm));
                DenseMatrix rebuilt(t.dim(), t.dim());
                for (std::size_t k = 0; k < der.dim(); ++k) rebuilt = rebuilt + der.tensor.constant(a, b, k) * der.der_basis[k];
                CHECK(rebuilt == comm);
            }
    }
}

TEST_CASE("ad_x is a derivation, so inner derivations lie in Der") {
    for (const auto& t : sample_tensors(41, 10)) {
        const auto der = derivation_algebra(t);
        for (std::size_t x = 0; x < t.dim(); ++x) {
            DenseMatrix ad(t.dim(), t.dim());
            for (std::size_t i = 0; i < t.dim(); ++i)
                for (std::size_t k = 0; k < t.dim(); ++k) ad(k, i) = t.constant(x, i, k);
            CHECK(der.space.contains(flatten_square(ad)));
        }
    }
}

TEST_CASE("characteristic nilpotency of a known example") {
    // L_n has the grading derivation e0 -> e0, e_i -> i e_i.
    for (std::size_t n = 3; n <= 7; ++n) CHECK_FALSE(is_characteristically_nilpotent(fixture::standard_filiform(n)).verdict);
    CHECK(is_nilpotent_matrix(jordan_block(5)));
    CHECK_FALSE(is_nilpotent_matrix(DenseMatrix::identity(2)));
}
