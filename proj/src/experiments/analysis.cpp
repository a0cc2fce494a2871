#include "nilab/experiments/analysis.hpp"

#include "nilab/errors.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace nilab::experiments {

std::size_t expected_dimension(std::size_t m) { return m * (m + 1) / 5; }

int mobius(std::uint64_t n) {
    if (n == 0) throw DomainError("mobius: undefined at 0");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    return n > 1 ? -sign : sign;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
            throw DomainError("witt_dims: value exceeds 64 bits");
        out *= base;
    }
    return out;
}

}  // namespace

std::vector<std::uint64_t> witt_dims(std::uint64_t g, std::size_t d_max) {
    if (g == 0 || d_max == 0) throw DomainError("witt_dims: generator count and degree must be positive");
    std::vector<std::uint64_t> out;
    out.reserve(d_max);
    for (std::size_t d = 1; d <= d_max; ++d) {
        // Signed sum of g^{d/e} over divisors e; positive and negative parts
        // are kept apart so nothing leaves the unsigned range.
        std::uint64_t plus = 0, minus = 0;
        for (std::size_t e = 1; e <= d; ++e) {
            if (d % e != 0) continue;
            const int mu = mobius(e);
            if (mu == 0) continue;
            const std::uint64_t term = checked_pow(g, d / e);
            (mu > 0 ? plus : minus) += term;
        }
        out.push_back((plus - minus) / d);
    }
    return out;
}

std::uint64_t free_nilpotent_dim(std::uint64_t g, std::size_t l) {
    if (l == 0) return 0;
    const auto dims = witt_dims(g, l);
    std::uint64_t total = 0;
    for (auto d : dims) total += d;
    return total;
}

DifferenceAnalysis difference_analysis(std::span<const std::size_t> dims) {
    if (dims.empty() || dims.back() != 0) throw DomainError("difference_analysis: sequence must end in 0");
    DifferenceAnalysis out;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
        if (dims[i + 1] >= dims[i]) throw DomainError("difference_analysis: sequence is not strictly decreasing");
        out.diffs.push_back(dims[i] - dims[i + 1]);
    }
    constexpr std::array<std::size_t, 4> free_prefix{2, 1, 2, 3};
    constexpr std::array<std::size_t, 3> nm_suffix{3, 2, 1};
    out.prefix_matches_free =
        out.diffs.size() >= free_prefix.size() && std::equal(free_prefix.begin(), free_prefix.end(), out.diffs.begin());
    out.suffix_matches_nm =
        out.diffs.size() >= nm_suffix.size() && std::equal(nm_suffix.rbegin(), nm_suffix.rend(), out.diffs.rbegin());
    return out;
}

}  // namespace nilab::experiments
