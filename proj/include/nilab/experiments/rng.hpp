#pragma once

#include "nilab/linalg/matrix.hpp"

#include <cstddef>
#include <cstdint>

namespace nilab::experiments {

/// SplitMix64. Bit-exact on every platform, so a seed fully determines
/// every sampled matrix and functional.
class RngState {
public:
    explicit RngState(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

/// Uniform integer in [-bound, bound] by rejection sampling: draw u, accept
/// iff u < 2^64 - (2^64 mod (2 bound + 1)), return (u mod (2 bound + 1)) - bound.
/// Throws DomainError for bound < 1.
std::int64_t rand_int(RngState& rng, std::int64_t bound);

/// Seed of trial `trial` under `master`: output number trial + 1 of a
/// SplitMix64 stream seeded with `master`.
std::uint64_t trial_seed(std::uint64_t master, std::size_t trial);

/// Strictly upper-triangular integer matrix with entries drawn in flattening
/// order. With `require_generic`, the whole matrix is redrawn until every
/// superdiagonal entry is nonzero, which is equivalent to Y^{m-1} != 0.
linalg::DenseMatrix random_generic_upper(std::size_t m, RngState& rng, std::int64_t bound, bool require_generic);

}  // namespace nilab::experiments
