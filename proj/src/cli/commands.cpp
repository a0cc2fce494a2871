#include "nilab/cli/commands.hpp"

#include "nilab/cli/report_io.hpp"
#include "nilab/experiments/analysis.hpp"
#include "nilab/experiments/parallel.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace nilab::cli {

namespace {

using experiments::ExperimentConfig;
using experiments::ExperimentReport;

constexpr std::size_t kLargestTabulatedOrder = 10;

struct Common {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

void add_format(CLI::App* cmd, Common& common) {
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

bool refuse_large(std::size_t m, bool allow_large, std::ostream& err) {
    if (m <= kLargestTabulatedOrder) return false;
    if (!allow_large) {
        err << "error: m > " << kLargestTabulatedOrder << " requires --allow-large\n";
        return true;
    }
    err << "warning: m = " << m << " is outside the tabulated range; the derivation solve may take a long time\n";
    return false;
}

int cmd_run(const ExperimentConfig& cfg, const Common& common, std::ostream& out) {
    const ExperimentReport report = experiments::run_experiment(cfg);
    if (common.json())
        out << report_to_json(report).dump(2) << '\n';
    else
        out << render_text(report);
    return kOk;
}

std::string join_dims(const std::vector<std::size_t>& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    return s.str();
}

int cmd_table(std::size_t m_min, std::size_t m_max, std::size_t trials, const ExperimentConfig& base,
              const Common& common, std::ostream& out) {
    struct Cell {
        std::size_t m, trial;
    };
    std::vector<Cell> cells;
    for (std::size_t m = m_min; m <= m_max; ++m)
        for (std::size_t t = 0; t < trials; ++t) cells.push_back({m, t});

    const auto reports = experiments::parallel_map<ExperimentReport>(cells.size(), [&](std::size_t i) {
        ExperimentConfig cfg = base;
        cfg.m = cells[i].m;
        cfg.seed = experiments::trial_seed(base.seed, cells[i].trial);
        return experiments::run_experiment(cfg);
    });

    std::map<std::size_t, bool> stable;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& first = reports[i - cells[i].trial];
        auto [it, fresh] = stable.emplace(cells[i].m, true);
        it->second = it->second && reports[i].fingerprint == first.fingerprint;
    }

    if (common.json()) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < cells.size(); ++i)
            rows.push_back({{"m", cells[i].m},
                            {"trial", cells[i].trial},
                            {"stable", stable[cells[i].m]},
                            {"report", report_to_json(reports[i])}});
        out << Json{{"schema_version", kSchemaVersion}, {"master_seed", base.seed}, {"rows", std::move(rows)}}.dump(2)
            << '\n';
        return kOk;
    }

    out << std::left << std::setw(4) << "m" << std::setw(6) << "trial" << std::setw(22) << "seed" << std::setw(5)
        << "dim" << std::setw(6) << "class" << std::setw(32) << "lower central dims" << std::setw(5) << "Der"
        << std::setw(15) << "Der verdict" << std::setw(9) << "Der[N,N]" << std::setw(15) << "[N,N] verdict"
        << std::setw(15) << "ideal verdict" << std::setw(8) << "formula" << "stable\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& r = reports[i];
        out << std::left << std::setw(4) << cells[i].m << std::setw(6) << cells[i].trial << std::setw(22)
            << r.config.seed << std::setw(5) << r.dim << std::setw(6) << r.nilpotency_class << std::setw(32)
            << join_dims(r.lower_dims) << std::setw(5) << r.der_dim << std::setw(15)
            << (r.der_nilpotent ? "nilpotent" : "non-nilpotent") << std::setw(9) << r.commutant.der_dim
            << std::setw(15) << (r.commutant.der_nilpotent ? "nilpotent" : "non-nilpotent") << std::setw(15)
            << (r.codim1_ideal.der_nilpotent ? "nilpotent" : "non-nilpotent") << std::setw(8)
            << (r.formula_match ? "match" : "differs") << (stable[cells[i].m] ? "true" : "false") << '\n';
    }
    return kOk;
}

int cmd_witt(std::uint64_t gens, std::size_t max_degree, const Common& common, std::ostream& out) {
    const auto dims = experiments::witt_dims(gens, max_degree);
    std::vector<std::uint64_t> cumulative;
    std::uint64_t total = 0;
    for (auto d : dims) cumulative.push_back(total += d);
    if (common.json()) {
        out << Json{{"gens", gens}, {"max_degree", max_degree}, {"witt", dims}, {"cumulative", cumulative}}.dump(2)
            << '\n';
        return kOk;
    }
    out << "degree  witt  free nilpotent dim\n";
    for (std::size_t d = 0; d < dims.size(); ++d)
        out << std::left << std::setw(8) << d + 1 << std::setw(6) << dims[d] << cumulative[d] << '\n';
    return kOk;
}

}  // namespace

int check_paper(const CheckPaperOptions& opts, const std::vector<experiments::GoldenRow>& golden, std::ostream& out) {
    std::vector<std::uint64_t> seeds;
    for (std::size_t i = 0; i < opts.seeds; ++i) seeds.push_back(experiments::trial_seed(opts.master_seed, i));
    const std::size_t m_max = opts.include_slow ? 10 : 8;
    const auto check = experiments::check_paper_table(seeds, 4, m_max, golden);
    if (opts.json)
        out << paper_check_to_json(check).dump(2) << '\n';
    else
        out << render_text(check);
    return check.all_match() ? kOk : kMismatch;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact experiments with nilpotent matrix Lie algebras", "nilab"};
    app.require_subcommand(1);
    Common common;

    ExperimentConfig cfg;
    bool no_generic = false;
    bool allow_large = false;
    auto* run = app.add_subcommand("run", "Run one seeded experiment");
    run->add_option("--m", cfg.m, "Matrix order")->check(CLI::Range(2, 12));
    run->add_option("--gens", cfg.generator_count, "Number of generators")->check(CLI::IsMember({2, 3}));
    run->add_option("--seed", cfg.seed, "64-bit seed");
    run->add_option("--bound", cfg.entry_bound, "Entries are drawn from [-bound, bound]")->check(CLI::PositiveNumber);
    run->add_flag("--no-generic", no_generic, "Do not resample Y until its superdiagonal is nonzero");
    run->add_flag("--allow-large", allow_large, "Permit m = 11, 12");
    add_format(run, common);

    std::size_t m_min = 4, m_max = 8, trials = 3;
    auto* table = app.add_subcommand("table", "Sweep m with several trials per order");
    table->add_option("--m-min", m_min, "Smallest order")->check(CLI::Range(2, 12));
    table->add_option("--m-max", m_max, "Largest order")->check(CLI::Range(2, 12));
    table->add_option("--trials", trials, "Trials per order")->check(CLI::PositiveNumber);
    table->add_option("--gens", cfg.generator_count, "Number of generators")->check(CLI::IsMember({2, 3}));
    table->add_option("--seed", cfg.seed, "Master seed; trial seeds are derived from it");
    table->add_option("--bound", cfg.entry_bound, "Entries are drawn from [-bound, bound]")->check(CLI::PositiveNumber);
    table->add_flag("--no-generic", no_generic, "Do not resample Y until its superdiagonal is nonzero");
    table->add_flag("--allow-large", allow_large, "Permit m = 11, 12");
    add_format(table, common);

    std::uint64_t witt_gens = 2;
    std::size_t max_degree = 5;
    auto* witt = app.add_subcommand("witt", "Free Lie algebra dimensions by degree");
    witt->add_option("--gens", witt_gens, "Number of free generators")->check(CLI::PositiveNumber);
    witt->add_option("--max-degree", max_degree, "Largest degree")->check(CLI::PositiveNumber);
    add_format(witt, common);

    CheckPaperOptions check;
    std::string golden_path;
    bool dump_golden = false;
    auto* paper = app.add_subcommand("check-paper", "Compare seeded runs with the published table");
    paper->add_option("--seeds", check.seeds, "Seeds per row")->check(CLI::PositiveNumber);
    paper->add_option("--seed", check.master_seed, "Master seed; per-row seeds are derived from it");
    paper->add_flag("--include-slow", check.include_slow, "Also check m = 9, 10");
    paper->add_option("--golden", golden_path, "Golden table JSON (default: built-in)")->check(CLI::ExistingFile);
    paper->add_flag("--dump-golden", dump_golden, "Print the built-in golden table as JSON and exit");
    add_format(paper, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return kUsage;
    }
    cfg.require_generic = !no_generic;

    try {
        if (run->parsed()) {
            if (refuse_large(cfg.m, allow_large, err)) return kUsage;
            return cmd_run(cfg, common, out);
        }
        if (table->parsed()) {
            if (m_min > m_max) {
                err << "error: --m-min must not exceed --m-max\n\n" << table->help();
                return kUsage;
            }
            if (refuse_large(m_max, allow_large, err)) return kUsage;
            return cmd_table(m_min, m_max, trials, cfg, common, out);
        }
        if (witt->parsed()) return cmd_witt(witt_gens, max_degree, common, out);
        if (paper->parsed()) {
            if (dump_golden) {
                out << golden_to_json(experiments::golden_table()).dump(2) << '\n';
                return kOk;
            }
            check.json = common.json();
            if (golden_path.empty()) return check_paper(check, experiments::golden_table(), out);
            std::ifstream in(golden_path);
            return check_paper(check, golden_from_json(Json::parse(in)), out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace nilab::cli
