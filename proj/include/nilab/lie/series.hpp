#pragma once

#include "nilab/lie/structure.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace nilab::lie {

enum class SeriesKind { LowerCentral, UpperCentral, Derived };

std::string_view to_string(SeriesKind kind);

/// Terms of a characteristic series up to (and including) its first fixed
/// point; the repeated term is not listed twice.
struct SeriesReport {
    SeriesKind kind;
    std::vector<Subspace> terms;
    std::vector<std::size_t> dims;
    bool terminated = false;
};

/// C^1 = L, C^{k+1} = [L, C^k].
SeriesReport lower_central_series(const StructureTensor& t);

/// Z_0 = 0, Z_{i+1} = {x : [x, e_j] in Z_i for all j}.
SeriesReport upper_central_series(const StructureTensor& t);

/// D^0 = L, D^{k+1} = [D^k, D^k].
SeriesReport derived_series(const StructureTensor& t);

Subspace center(const StructureTensor& t);

struct Nilpotency {
    bool is_nilpotent = false;
    /// Number of nonzero lower-central terms; empty when not nilpotent.
    std::optional<std::size_t> nilpotency_class;
};

Nilpotency nilpotency(const StructureTensor& t);
Nilpotency nilpotency(const SeriesReport& lower);

/// Minimal number of generators, n - dim [L, L]. Only meaningful for
/// nilpotent algebras; throws DomainError otherwise.
std::size_t generators_count(const StructureTensor& t);

/// Nilpotent of class dim - 1 (and dim >= 2).
bool is_filiform(const StructureTensor& t);

}  // namespace nilab::lie
