#include "nilab/experiments/rng.hpp"

#include "nilab/errors.hpp"

#include <limits>

namespace nilab::experiments {

std::int64_t rand_int(RngState& rng, std::int64_t bound) {
    if (bound < 1) throw DomainError("rand_int: bound must be at least 1");
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    // 2^64 mod span, computed without 128-bit arithmetic.
    const std::uint64_t excess = (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
    while (true) {
        const std::uint64_t u = rng.next();
        if (excess != 0 && u >= std::numeric_limits<std::uint64_t>::max() - excess + 1) continue;
        return static_cast<std::int64_t>(u % span) - bound;
    }
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t trial) {
    RngState rng(master);
    std::uint64_t out = rng.next();
    for (std::size_t i = 0; i < trial; ++i) out = rng.next();
    return out;
}

linalg::DenseMatrix random_generic_upper(std::size_t m, RngState& rng, std::int64_t bound, bool require_generic) {
    if (m < 2) throw InvalidOrder("random_generic_upper: order must be at least 2");
    while (true) {
        linalg::DenseMatrix y(m, m);
        bool generic = true;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const auto v = rand_int(rng, bound);
                y(i, j) = static_cast<long>(v);
                if (j == i + 1 && v == 0) generic = false;
            }
        if (generic || !require_generic) return y;
    }
}

}  // namespace nilab::experiments
