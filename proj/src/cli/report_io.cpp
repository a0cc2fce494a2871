#include "nilab/cli/report_io.hpp"

#include "nilab/experiments/analysis.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace nilab::cli {

using experiments::ExperimentReport;
using experiments::GoldenRow;

Json scalar_to_json(const linalg::Scalar& x) {
    if (linalg::is_integer(x) && x.get_num().fits_slong_p()) return Json(x.get_num().get_si());
    return Json(linalg::to_string(x));
}

linalg::Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return linalg::Scalar(j.get<long>());
    if (j.is_string()) return linalg::parse_scalar(j.get<std::string>());
    throw std::invalid_argument("scalar must be an integer or a \"p/q\" string");
}

Json matrix_to_json(const linalg::DenseMatrix& a) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(scalar_to_json(a(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

linalg::DenseMatrix matrix_from_json(const Json& j) {
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    linalg::DenseMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw std::invalid_argument("ragged matrix in report");
        for (std::size_t k = 0; k < cols; ++k) out(i, k) = scalar_from_json(j.at(i).at(k));
    }
    return out;
}

namespace {

constexpr const char* kGeneratorNames[] = {"X", "Y", "Z"};

std::vector<std::size_t> dims_from(const Json& j) { return j.get<std::vector<std::size_t>>(); }

}  // namespace

Json report_to_json(const ExperimentReport& r) {
    Json gens = Json::object();
    for (std::size_t i = 0; i < r.generators.size(); ++i) gens[kGeneratorNames[i]] = matrix_to_json(r.generators[i]);

    Json results = {
        {"dim", r.dim},
        {"class", r.nilpotency_class},
        {"lower_dims", r.lower_dims},
        {"upper_dims", r.upper_dims},
        {"derived_dims", r.derived_dims},
        {"central_series_members_coincide", r.central_series_members_coincide},
        {"center_dim", r.center_dim},
        {"generators_count", r.generators_count},
        {"der", {{"dim", r.der_dim}, {"nilpotent", r.der_nilpotent}, {"all_operators_nilpotent", r.der_all_operators_nilpotent}}},
        {"commutant",
         {{"dim", r.commutant.dim}, {"der_dim", r.commutant.der_dim}, {"der_nilpotent", r.commutant.der_nilpotent}}},
        {"codim1_ideal",
         {{"coefficients", r.codim1_ideal.coefficients},
          {"dim", r.codim1_ideal.dim},
          {"der_dim", r.codim1_ideal.der_dim},
          {"der_nilpotent", r.codim1_ideal.der_nilpotent}}},
        {"formula", {{"expected", r.formula_expected}, {"match", r.formula_match}}},
        {"rigidity", experiments::rigidity_obstruction(r)},
    };

    return Json{
        {"schema_version", kSchemaVersion},
        {"config",
         {{"m", r.config.m},
          {"gens", r.config.generator_count},
          {"seed", r.config.seed},
          {"bound", r.config.entry_bound},
          {"generic", r.config.require_generic}}},
        {"generators", std::move(gens)},
        {"results", std::move(results)},
        {"fingerprint", r.fingerprint},
    };
}

ExperimentReport report_from_json(const Json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw std::invalid_argument("unsupported report schema version");
    ExperimentReport r;
    const Json& cfg = j.at("config");
    r.config.m = cfg.at("m").get<std::size_t>();
    r.config.generator_count = cfg.at("gens").get<std::size_t>();
    r.config.seed = cfg.at("seed").get<std::uint64_t>();
    r.config.entry_bound = cfg.at("bound").get<std::int64_t>();
    r.config.require_generic = cfg.at("generic").get<bool>();

    const Json& gens = j.at("generators");
    for (std::size_t i = 0; i < r.config.generator_count; ++i)
        r.generators.push_back(matrix_from_json(gens.at(kGeneratorNames[i])));

    const Json& res = j.at("results");
    r.dim = res.at("dim").get<std::size_t>();
    r.nilpotency_class = res.at("class").get<std::size_t>();
    r.lower_dims = dims_from(res.at("lower_dims"));
    r.upper_dims = dims_from(res.at("upper_dims"));
    r.derived_dims = dims_from(res.at("derived_dims"));
    r.central_series_members_coincide = res.at("central_series_members_coincide").get<bool>();
    r.center_dim = res.at("center_dim").get<std::size_t>();
    r.generators_count = res.at("generators_count").get<std::size_t>();
    r.der_dim = res.at("der").at("dim").get<std::size_t>();
    r.der_nilpotent = res.at("der").at("nilpotent").get<bool>();
    r.der_all_operators_nilpotent = res.at("der").at("all_operators_nilpotent").get<bool>();
    const Json& com = res.at("commutant");
    r.commutant = {com.at("dim").get<std::size_t>(), com.at("der_dim").get<std::size_t>(),
                   com.at("der_nilpotent").get<bool>()};
    const Json& ideal = res.at("codim1_ideal");
    r.codim1_ideal = {ideal.at("coefficients").get<std::vector<std::int64_t>>(), ideal.at("dim").get<std::size_t>(),
                      ideal.at("der_dim").get<std::size_t>(), ideal.at("der_nilpotent").get<bool>()};
    r.formula_expected = res.at("formula").at("expected").get<std::size_t>();
    r.formula_match = res.at("formula").at("match").get<bool>();
    r.fingerprint = j.at("fingerprint").get<std::string>();
    return r;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    return out.str();
}

std::string verdict(bool nilpotent) { return nilpotent ? "nilpotent" : "non-nilpotent"; }

void write_matrix(std::ostringstream& out, const linalg::DenseMatrix& a) {
    std::size_t width = 1;
    for (const auto& x : a.entries()) width = std::max(width, linalg::to_string(x).size());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out << "    [";
        for (std::size_t k = 0; k < a.cols(); ++k)
            out << (k ? " " : "") << std::setw(static_cast<int>(width)) << linalg::to_string(a(i, k));
        out << "]\n";
    }
}

}  // namespace

std::string render_text(const ExperimentReport& r) {
    std::ostringstream out;
    out << "experiment: m = " << r.config.m << ", generators = " << r.config.generator_count
        << ", seed = " << r.config.seed << ", bound = " << r.config.entry_bound
        << ", generic = " << (r.config.require_generic ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < r.generators.size(); ++i) {
        out << "  " << kGeneratorNames[i] << (i == 0 ? " = J_m(0):\n" : ":\n");
        write_matrix(out, r.generators[i]);
    }
    const auto row = [&](const char* label, const std::string& value) {
        out << "  " << std::left << std::setw(26) << label << value << '\n';
    };
    row("dim N", std::to_string(r.dim));
    row("nilpotency class", std::to_string(r.nilpotency_class));
    row("lower central dims", join(r.lower_dims));
    row("upper central dims", join(r.upper_dims));
    row("central members coincide", r.central_series_members_coincide ? "yes" : "no");
    row("derived dims", join(r.derived_dims));
    row("center dim", std::to_string(r.center_dim));
    row("generators (codim [N,N])", std::to_string(r.generators_count));
    row("dim Der N", std::to_string(r.der_dim) + "; " + verdict(r.der_nilpotent) +
                         (r.der_all_operators_nilpotent ? " (all operators nilpotent)" : ""));
    row("dim [N,N]", std::to_string(r.commutant.dim));
    row("dim Der [N,N]", std::to_string(r.commutant.der_dim) + "; " + verdict(r.commutant.der_nilpotent));
    std::ostringstream coeffs;
    for (std::size_t i = 0; i < r.codim1_ideal.coefficients.size(); ++i)
        coeffs << (i ? ", " : "") << r.codim1_ideal.coefficients[i];
    row("codim-1 ideal functional", "(" + coeffs.str() + ")");
    row("dim Der ideal", std::to_string(r.codim1_ideal.der_dim) + "; " + verdict(r.codim1_ideal.der_nilpotent));
    row("rigidity", experiments::rigidity_obstruction(r));
    row("floor(m(m+1)/5)", std::to_string(r.formula_expected) + (r.formula_match ? " (matches)" : " (differs)"));
    row("fingerprint", r.fingerprint);
    return out.str();
}

Json golden_to_json(const std::vector<GoldenRow>& rows) {
    Json out = Json::array();
    for (const auto& g : rows) {
        Json row = {{"m", g.m}, {"gens", g.gens}, {"dim", g.dim}};
        row["class"] = g.nilpotency_class ? Json(*g.nilpotency_class) : Json(nullptr);
        row["lower_dims"] = g.lower_dims;
        row["der"] = {{"dim", g.der_dim}, {"nilpotent", g.der_nilpotent}};
        row["commutant"] = g.commutant_der_dim ? Json{{"der_dim", *g.commutant_der_dim},
                                                      {"der_nilpotent", *g.commutant_der_nilpotent}}
                                               : Json(nullptr);
        row["codim1_ideal"] =
            g.codim1_der_nilpotent ? Json{{"der_nilpotent", *g.codim1_der_nilpotent}} : Json(nullptr);
        row["derived_prefix"] = g.derived_prefix;
        out.push_back(std::move(row));
    }
    return Json{{"schema_version", kSchemaVersion}, {"rows", std::move(out)}};
}

std::vector<GoldenRow> golden_from_json(const Json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw std::invalid_argument("unsupported golden table schema version");
    std::vector<GoldenRow> rows;
    for (const auto& r : j.at("rows")) {
        GoldenRow g;
        g.m = r.at("m").get<std::size_t>();
        g.gens = r.at("gens").get<std::size_t>();
        g.dim = r.at("dim").get<std::size_t>();
        if (!r.at("class").is_null()) g.nilpotency_class = r.at("class").get<std::size_t>();
        g.lower_dims = r.at("lower_dims").get<std::vector<std::size_t>>();
        g.der_dim = r.at("der").at("dim").get<std::size_t>();
        g.der_nilpotent = r.at("der").at("nilpotent").get<bool>();
        if (!r.at("commutant").is_null()) {
            g.commutant_der_dim = r.at("commutant").at("der_dim").get<std::size_t>();
            g.commutant_der_nilpotent = r.at("commutant").at("der_nilpotent").get<bool>();
        }
        if (!r.at("codim1_ideal").is_null())
            g.codim1_der_nilpotent = r.at("codim1_ideal").at("der_nilpotent").get<bool>();
        g.derived_prefix = r.at("derived_prefix").get<std::vector<std::size_t>>();
        rows.push_back(std::move(g));
    }
    return rows;
}

Json paper_check_to_json(const experiments::PaperCheck& check) {
    Json rows = Json::array();
    for (const auto& r : check.rows) {
        Json cells = Json::array();
        for (const auto& c : r.cells)
            cells.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"match", c.match}});
        rows.push_back({{"m", r.m},
                        {"gens", r.gens},
                        {"seed", r.seed},
                        {"match", r.all_match()},
                        {"cells", std::move(cells)},
                        {"fingerprint", r.fingerprint}});
    }
    return Json{{"schema_version", kSchemaVersion},
                {"all_match", check.all_match()},
                {"mismatches", check.mismatches()},
                {"rows", std::move(rows)}};
}

std::string render_text(const experiments::PaperCheck& check) {
    std::ostringstream out;
    for (const auto& r : check.rows) {
        out << (r.all_match() ? "MATCH    " : "MISMATCH ") << "m=" << r.m << " gens=" << r.gens << " seed=" << r.seed
            << '\n';
        for (const auto& c : r.cells)
            if (!c.match) out << "    " << c.name << ": expected " << c.expected << ", got " << c.actual << '\n';
    }
    out << (check.all_match() ? "all cells match" : std::to_string(check.mismatches()) + " cell(s) differ") << " ("
        << check.rows.size() << " runs)\n";
    return out.str();
}

}  // namespace nilab::cli
