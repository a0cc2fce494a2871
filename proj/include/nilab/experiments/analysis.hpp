#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nilab::experiments {

/// floor(m (m + 1) / 5). Observed to equal dim N(J_m(0), Y) only on a
/// limited range of m; outside it the value is not authoritative.
std::size_t expected_dimension(std::size_t m);

/// Range of m on which `expected_dimension` is claimed to hold.
constexpr bool formula_claimed_for(std::size_t m) { return m >= 4 && m <= 10; }

/// Moebius function by trial factorization.
int mobius(std::uint64_t n);

/// Degree-d dimensions of the free Lie algebra on g generators for
/// d = 1..d_max (Witt's formula). Throws DomainError if g or d_max is 0, or
/// if an intermediate power overflows 64 bits.
std::vector<std::uint64_t> witt_dims(std::uint64_t g, std::size_t d_max);

/// dim of the free nilpotent Lie algebra of class l on g generators.
std::uint64_t free_nilpotent_dim(std::uint64_t g, std::size_t l);

struct DifferenceAnalysis {
    std::vector<std::size_t> diffs;
    /// diffs begins 2, 1, 2, 3 (as for the free algebra on two generators).
    bool prefix_matches_free = false;
    /// diffs ends 3, 2, 1 (as for N_m).
    bool suffix_matches_nm = false;
};

/// Successive differences of a strictly decreasing dimension sequence
/// ending in 0. Throws DomainError otherwise.
DifferenceAnalysis difference_analysis(std::span<const std::size_t> dims);

}  // namespace nilab::experiments
