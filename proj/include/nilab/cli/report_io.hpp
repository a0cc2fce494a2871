#pragma once

#include "nilab/experiments/experiment.hpp"
#include "nilab/experiments/paper_table.hpp"
#include "nilab/linalg/matrix.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nilab::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Integers that fit in 64 bits become JSON numbers, anything else a
/// "p/q" string.
Json scalar_to_json(const linalg::Scalar& x);
linalg::Scalar scalar_from_json(const Json& j);

Json matrix_to_json(const linalg::DenseMatrix& a);
linalg::DenseMatrix matrix_from_json(const Json& j);

/// Stable report schema; see README for the key list.
Json report_to_json(const experiments::ExperimentReport& r);
/// Inverse of report_to_json. Throws std::invalid_argument (or a json
/// exception) on missing keys or a schema version mismatch.
experiments::ExperimentReport report_from_json(const Json& j);

std::string render_text(const experiments::ExperimentReport& r);

Json golden_to_json(const std::vector<experiments::GoldenRow>& rows);
std::vector<experiments::GoldenRow> golden_from_json(const Json& j);

Json paper_check_to_json(const experiments::PaperCheck& check);
std::string render_text(const experiments::PaperCheck& check);

}  // namespace nilab::cli
