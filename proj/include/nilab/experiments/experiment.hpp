#pragma once

#include "nilab/experiments/rng.hpp"
#include "nilab/lie/structure.hpp"
#include "nilab/linalg/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace nilab::experiments {

struct ExperimentConfig {
    std::size_t m = 6;
    std::size_t generator_count = 2;
    std::uint64_t seed = 1;
    std::int64_t entry_bound = 10;
    bool require_generic = true;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Throws std::invalid_argument unless 2 <= m <= 12, generator_count is 2
/// or 3 and entry_bound >= 1.
void validate(const ExperimentConfig& cfg);

struct SubalgebraVerdict {
    std::size_t dim = 0;
    std::size_t der_dim = 0;
    bool der_nilpotent = false;

    friend bool operator==(const SubalgebraVerdict&, const SubalgebraVerdict&) = default;
};

struct IdealVerdict {
    /// Functional on L/[L,L] in the quotient coordinates (free columns of [L,L]).
    std::vector<std::int64_t> coefficients;
    std::size_t dim = 0;
    std::size_t der_dim = 0;
    bool der_nilpotent = false;

    friend bool operator==(const IdealVerdict&, const IdealVerdict&) = default;
};

/// Everything measured in one seeded run. Generators are X = J_m(0), then
/// the random Y (and Z for three generators).
struct ExperimentReport {
    ExperimentConfig config;
    std::vector<linalg::DenseMatrix> generators;

    std::size_t dim = 0;
    std::size_t nilpotency_class = 0;
    std::vector<std::size_t> lower_dims;
    std::vector<std::size_t> upper_dims;
    std::vector<std::size_t> derived_dims;
    /// Upper central terms equal the lower central terms read backwards.
    bool central_series_members_coincide = false;
    std::size_t center_dim = 0;
    std::size_t generators_count = 0;
    std::size_t der_dim = 0;
    bool der_nilpotent = false;
    bool der_all_operators_nilpotent = false;
    SubalgebraVerdict commutant;
    IdealVerdict codim1_ideal;
    std::size_t formula_expected = 0;
    bool formula_match = false;
    std::string fingerprint;

    friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// Semicolon-separated record of every dimension and verdict in `r`
/// (never the sampled entries), so runs that agree up to the choice of
/// random matrices share a fingerprint.
std::string make_fingerprint(const ExperimentReport& r);

/// One full run: build X, Y (, Z), close, compute series, center,
/// derivations, the commutant and a random codimension-1 ideal with their
/// derivation algebras. Identical configs give identical reports.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

struct Codim1Ideal {
    linalg::Subspace ideal;
    std::vector<std::int64_t> coefficients;
};

/// Kernel of the functional sum_t coeffs[t] * (x mod [L,L])_{f_t}, where f_t
/// are the non-pivot columns of [L,L]. Contains [L,L], has codimension 1,
/// and is checked to be an ideal. Throws DomainError if the algebra is not
/// nilpotent, has no generators, or `coeffs` is zero or of the wrong length.
Codim1Ideal codim1_ideal(const lie::StructureTensor& t, std::vector<std::int64_t> coeffs);

/// `codim1_ideal` with coefficients drawn by rand_int, redrawn while all zero.
Codim1Ideal codim1_random_ideal(const lie::StructureTensor& t, RngState& rng, std::int64_t bound = 10);

/// [L, s] contained in s.
bool is_ideal(const lie::StructureTensor& t, const linalg::Subspace& s);

inline constexpr const char* kNotRigid = "not-rigid (Carles obstruction)";
inline constexpr const char* kInconclusive = "inconclusive";

/// One-directional check: a rigid nilpotent algebra has characteristically
/// nilpotent codimension-1 ideals, so a sampled ideal that is not rules
/// rigidity out. Anything else is inconclusive.
std::string rigidity_obstruction(const ExperimentReport& report);

}  // namespace nilab::experiments
