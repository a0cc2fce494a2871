#include "nilab/experiments/paper_table.hpp"

#include "nilab/experiments/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace nilab::experiments {

const std::vector<GoldenRow>& golden_table() {
    static const std::vector<GoldenRow> table = {
        {4, 2, 4, 3, {4, 2, 1, 0}, 7, false, 4, false, false, {}},
        {5, 2, 6, 4, {6, 4, 3, 1, 0}, 10, false, 16, false, false, {}},
        {6, 2, 8, 5, {8, 6, 5, 3, 1, 0}, 12, true, 24, false, false, {}},
        {7, 2, 11, 6, {11, 9, 8, 6, 3, 1, 0}, 18, true, 40, false, false, {}},
        {8, 2, 14, 7, {14, 12, 11, 9, 6, 3, 1, 0}, 21, true, 53, false, false, {}},
        {9, 2, 18, 8, {18, 16, 15, 13, 10, 6, 3, 1, 0}, 27, true, 73, false, false, {18, 16, 8}},
        {10, 2, 22, 9, {22, 20, 19, 17, 14, 10, 6, 3, 1, 0}, 32, true, 86, false, false, {}},
        {6, 3, 12, std::nullopt, {12, 9, 6, 3, 1, 0}, 16, true, std::nullopt, std::nullopt, std::nullopt, {}},
        {7, 3, 16, std::nullopt, {16, 13, 10, 6, 3, 1, 0}, 22, true, std::nullopt, std::nullopt, std::nullopt, {}},
    };
    return table;
}

const std::vector<std::size_t>& published_dimension_sequence() {
    static const std::vector<std::size_t> seq = {1, 3, 4, 6, 8, 11, 14, 18, 22, 26, 35, 42};
    return seq;
}

namespace {

std::string render(std::size_t v) { return std::to_string(v); }
std::string render(bool v) { return v ? "nilpotent" : "non-nilpotent"; }
std::string render(const std::vector<std::size_t>& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ']';
    return out.str();
}

template <class T>
void add_cell(RowResult& row, std::string name, const T& expected, const T& actual) {
    row.cells.push_back({std::move(name), render(expected), render(actual), expected == actual});
}

}  // namespace

bool RowResult::all_match() const {
    return std::all_of(cells.begin(), cells.end(), [](const CellResult& c) { return c.match; });
}

bool PaperCheck::all_match() const {
    return std::all_of(rows.begin(), rows.end(), [](const RowResult& r) { return r.all_match(); });
}

std::size_t PaperCheck::mismatches() const {
    std::size_t n = 0;
    for (const auto& r : rows)
        for (const auto& c : r.cells) n += c.match ? 0 : 1;
    return n;
}

RowResult compare_row(const GoldenRow& golden, const ExperimentReport& report) {
    RowResult row{golden.m, golden.gens, report.config.seed, {}, report.fingerprint};
    add_cell(row, "dim", golden.dim, report.dim);
    if (golden.nilpotency_class) add_cell(row, "class", *golden.nilpotency_class, report.nilpotency_class);
    add_cell(row, "lower_dims", golden.lower_dims, report.lower_dims);
    add_cell(row, "der_dim", golden.der_dim, report.der_dim);
    add_cell(row, "der_nilpotent", golden.der_nilpotent, report.der_nilpotent);
    if (golden.commutant_der_dim) add_cell(row, "commutant_der_dim", *golden.commutant_der_dim, report.commutant.der_dim);
    if (golden.commutant_der_nilpotent)
        add_cell(row, "commutant_der_nilpotent", *golden.commutant_der_nilpotent, report.commutant.der_nilpotent);
    if (golden.codim1_der_nilpotent)
        add_cell(row, "codim1_der_nilpotent", *golden.codim1_der_nilpotent, report.codim1_ideal.der_nilpotent);
    if (!golden.derived_prefix.empty()) {
        const std::size_t k = std::min(golden.derived_prefix.size(), report.derived_dims.size());
        std::vector<std::size_t> prefix(report.derived_dims.begin(), report.derived_dims.begin() + k);
        add_cell(row, "derived_prefix", golden.derived_prefix, prefix);
    }
    return row;
}

PaperCheck check_paper_table(const std::vector<std::uint64_t>& seeds, std::size_t m_min, std::size_t m_max,
                             const std::vector<GoldenRow>& golden) {
    std::vector<const GoldenRow*> rows;
    for (const auto& g : golden)
        if (g.m >= m_min && g.m <= m_max) rows.push_back(&g);

    const std::size_t cells = rows.size() * seeds.size();
    PaperCheck out;
    out.rows = parallel_map<RowResult>(cells, [&](std::size_t i) {
        const GoldenRow& g = *rows[i / seeds.size()];
        ExperimentConfig cfg;
        cfg.m = g.m;
        cfg.generator_count = g.gens;
        cfg.seed = seeds[i % seeds.size()];
        return compare_row(g, run_experiment(cfg));
    });
    return out;
}

}  // namespace nilab::experiments
