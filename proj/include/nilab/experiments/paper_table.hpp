#pragma once

#include "nilab/experiments/experiment.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nilab::experiments {

/// Published values for the general subalgebra N(J_m(0), Y[, Z]).
/// Lower-central dims include the terminal 0.
struct GoldenRow {
    std::size_t m = 0;
    std::size_t gens = 2;
    std::size_t dim = 0;
    std::optional<std::size_t> nilpotency_class;
    std::vector<std::size_t> lower_dims;
    std::size_t der_dim = 0;
    bool der_nilpotent = false;
    std::optional<std::size_t> commutant_der_dim;
    std::optional<bool> commutant_der_nilpotent;
    /// Codimension-1 ideals are expected never to be characteristically nilpotent.
    std::optional<bool> codim1_der_nilpotent;
    std::vector<std::size_t> derived_prefix;

    friend bool operator==(const GoldenRow&, const GoldenRow&) = default;
};

const std::vector<GoldenRow>& golden_table();

/// Observed dim N(J_m(0), Y) for m = 2..13 as published. Values for
/// m >= 11 lie outside the tabulated range and are unverified.
const std::vector<std::size_t>& published_dimension_sequence();

struct CellResult {
    std::string name;
    std::string expected;
    std::string actual;
    bool match = false;
};

struct RowResult {
    std::size_t m = 0;
    std::size_t gens = 2;
    std::uint64_t seed = 0;
    std::vector<CellResult> cells;
    std::string fingerprint;

    bool all_match() const;
};

struct PaperCheck {
    std::vector<RowResult> rows;

    bool all_match() const;
    std::size_t mismatches() const;
};

/// Compares one report against one golden row, cell by cell.
RowResult compare_row(const GoldenRow& golden, const ExperimentReport& report);

/// Runs every golden row with m in [m_min, m_max] once per seed and compares
/// it. Cells are evaluated in parallel; output order is (row, seed).
PaperCheck check_paper_table(const std::vector<std::uint64_t>& seeds, std::size_t m_min, std::size_t m_max,
                             const std::vector<GoldenRow>& golden = golden_table());

}  // namespace nilab::experiments
