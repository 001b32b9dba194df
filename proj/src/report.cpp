#include "cobbdouglas/report.hpp"

#include "cobbdouglas/errors.hpp"
#include "cobbdouglas/svg_chart.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <sstream>

namespace cobbdouglas {

namespace {

constexpr double kSingleHamiltonianTolerance = 1e-9;

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json series_json(const OlsFit& fit) {
    return {
        {"b", fit.slope},
        {"C", fit.intercept},
        {"n", fit.n},
        {"sse", fit.sse},
        {"r_squared", optional_number(fit.r_squared)},
        {"adjusted_r_squared", optional_number(fit.adjusted_r_squared)},
    };
}

// Human-readable report numbers; JSON and CSV keep full round-trip precision.
std::string tn(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string text_optional(const std::optional<double>& v) {
    return v ? tn(*v) : std::string("undefined (constant response)");
}

} // namespace

std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

PipelineReport run_pipeline(const SeriesTable& table, TimeOrigin origin) {
    GrowthFit growth = fit_growth(table, origin);
    const GrowthRates rates = growth.params.rates();
    const auto estimated = estimate_series(growth.params, table, origin);
    const auto observed_capital = table.ln_capital();
    OlsFit capital_ove = observed_vs_estimated_fit(observed_capital, estimated.ln_capital);

    const OrderingCheck ordering = check_ordering(rates);
    const BiHamiltonianSolution solution = solve_ab(rates);
    const Elasticities elasticities = elasticities_from_ab(solution);
    H3Stats h3 = h3_series(table, solution);
    const double productivity = tfp(h3.mean, solution);
    const CobbDouglasModel model = build_model(elasticities, productivity);
    ConstrainedFit crosscheck = constrained_cd_fit(table);
    const CobbDouglasModel crosscheck_model(crosscheck.tfp, crosscheck.k, 1.0 - crosscheck.k);

    std::vector<std::string> warnings;
    const double defect = rates.labor + rates.output - rates.capital;
    if (std::abs(defect) > kSingleHamiltonianTolerance) {
        warnings.push_back("single quadratic Hamiltonian unavailable: b1 + b3 = b2 violated (b1 + b3 - b2 = " +
                           format_number(defect) + "); elasticities taken from the bi-Hamiltonian solution");
    }
    if (!ordering.holds) {
        warnings.push_back("growth-rate ordering b_capital > b_output > b_labor violated (" + ordering.violated +
                           " fails); elasticities are not both positive");
    }

    return PipelineReport{
        .growth = std::move(growth),
        .ordering = ordering,
        .capital_observed_vs_estimated = std::move(capital_ove),
        .solution = solution,
        .elasticities = elasticities,
        .h3 = std::move(h3),
        .model = model,
        .crosscheck = std::move(crosscheck),
        .single_hamiltonian_defect = defect,
        .model_residuals = residual_report(model, table),
        .crosscheck_residuals = residual_report(crosscheck_model, table),
        .warnings = std::move(warnings),
    };
}

nlohmann::ordered_json to_json(const PipelineReport& r) {
    using json = nlohmann::ordered_json;
    const auto& ove = r.capital_observed_vs_estimated;
    const auto [res1, res2] = r.solution.condition_residuals();

    json per_year = json::array();
    for (const auto& v : r.h3.per_year) per_year.push_back({{"year", v.year}, {"value", v.value}});

    json warnings = json::array();
    for (const auto& w : r.warnings) warnings.push_back(w);

    return {
        {"schema_version", kReportSchemaVersion},
        {"growth",
         {
             {"time_origin", to_string(r.growth.origin)},
             {"labor", series_json(r.growth.labor)},
             {"capital", series_json(r.growth.capital)},
             {"output", series_json(r.growth.output)},
             {"ordering",
              {{"holds", r.ordering.holds},
               {"violated", r.ordering.holds ? json(nullptr) : json(r.ordering.violated)}}},
             {"capital_observed_vs_estimated",
              {{"slope", ove.slope},
               {"intercept", ove.intercept},
               {"r_squared", optional_number(ove.r_squared)},
               {"adjusted_r_squared", optional_number(ove.adjusted_r_squared)}}},
         }},
        {"solution",
         {
             {"a", r.solution.a()},
             {"b", r.solution.b()},
             {"det", r.solution.det()},
             {"a_minus_b", r.solution.a_minus_b()},
             {"condition_residuals", {res1, res2}},
             {"single_hamiltonian_defect", r.single_hamiltonian_defect},
         }},
        {"elasticities", {{"alpha", r.elasticities.alpha}, {"beta", r.elasticities.beta}}},
        {"h3",
         {
             {"coefficients", {r.h3.coefficients[0], r.h3.coefficients[1], r.h3.coefficients[2]}},
             {"mean", r.h3.mean},
             {"variance", r.h3.variance},
             {"variance_population", r.h3.variance_population},
             {"per_year", std::move(per_year)},
         }},
        {"model",
         {
             {"tfp", r.model.tfp()},
             {"exp_labor", r.model.exp_labor()},
             {"exp_capital", r.model.exp_capital()},
             {"residual_sse", r.model_residuals.sse},
             {"max_abs_residual", r.model_residuals.max_abs_residual},
         }},
        {"crosscheck",
         {
             {"k", r.crosscheck.k},
             {"tfp", r.crosscheck.tfp},
             {"r_squared", optional_number(r.crosscheck.fit.r_squared)},
             {"residual_sse", r.crosscheck_residuals.sse},
             {"max_abs_residual", r.crosscheck_residuals.max_abs_residual},
         }},
        {"warnings", std::move(warnings)},
    };
}

std::string format_json(const PipelineReport& report) {
    return to_json(report).dump(2) + "\n";
}

std::string format_text(const PipelineReport& r) {
    std::ostringstream os;
    const auto& g = r.growth;
    const auto line = [&](const char* name, const OlsFit& f) {
        os << "  " << name << ": b = " << tn(f.slope) << ", C = " << tn(f.intercept)
           << ", SSE = " << tn(f.sse) << ", R^2 = " << text_optional(f.r_squared) << "\n";
    };
    os << "Exponential growth fits, ln x = C + b t (t origin: " << to_string(g.origin) << ")\n";
    line("labor     (x1 = L)", g.labor);
    line("capital   (x2 = K)", g.capital);
    line("output    (x3 = Y)", g.output);
    os << "  observed vs estimated capital: adjusted R^2 = "
       << text_optional(r.capital_observed_vs_estimated.adjusted_r_squared) << "\n";
    os << "  b_capital > b_output > b_labor: " << (r.ordering.holds ? "holds" : "violated (" + r.ordering.violated + ")")
       << "\n\n";

    os << "Bi-Hamiltonian parameters\n";
    os << "  a = " << tn(r.solution.a()) << ", b = " << tn(r.solution.b())
       << "  (b3^2 - b1 b2 = " << tn(r.solution.det()) << ")\n";
    os << "  alpha = " << tn(r.elasticities.alpha) << ", beta = " << tn(r.elasticities.beta)
       << "\n\n";

    os << "First integral H3 = (b-1) ln L + (1-a) ln K + (a-b) ln Y\n";
    os << "  mean = " << tn(r.h3.mean) << ", variance = " << tn(r.h3.variance)
       << " (n-1), " << tn(r.h3.variance_population) << " (n)\n";
    os << "  A = exp(H3 / (a - b)) = " << tn(r.model.tfp()) << "\n\n";

    os << "Cobb-Douglas model\n";
    os << "  Y = " << tn(r.model.tfp()) << " L^" << tn(r.model.exp_labor()) << " K^"
       << tn(r.model.exp_capital()) << "\n";
    os << "  log-output residual SSE = " << tn(r.model_residuals.sse)
       << ", max |residual| = " << tn(r.model_residuals.max_abs_residual) << "\n\n";

    os << "Constrained 1928-form regression, ln(Y/K) on ln(L/K)\n";
    os << "  k = " << tn(r.crosscheck.k) << ", A = " << tn(r.crosscheck.tfp)
       << ", residual SSE = " << tn(r.crosscheck_residuals.sse) << "\n";

    if (!r.warnings.empty()) {
        os << "\nWarnings\n";
        for (const auto& w : r.warnings) os << "  - " << w << "\n";
    }
    return os.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content,
                std::vector<std::filesystem::path>& written) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
    written.push_back(path);
}

std::vector<double> years_of(const SeriesTable& table) {
    std::vector<double> y;
    for (const auto& o : table.observations()) y.push_back(o.year);
    return y;
}

std::string fit_csv(const SeriesTable& table, const std::vector<double>& observed, const std::vector<double>& estimated) {
    std::string s = "year,observed,estimated\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
        s += std::to_string(table[i].year) + "," + format_number(observed[i]) + "," + format_number(estimated[i]) + "\n";
    }
    return s;
}

svg::Chart fit_chart(const std::string& title, const SeriesTable& table, const std::vector<double>& observed,
                     const std::vector<double>& estimated) {
    const auto years = years_of(table);
    return {
        .title = title,
        .x_label = "year",
        .y_label = "log index",
        .series = {{"observed", years, observed, "#1f77b4", true, true},
                   {"estimated", years, estimated, "#d62728", false, true}},
    };
}

} // namespace

std::vector<std::filesystem::path> export_figures(const PipelineReport& r, const SeriesTable& table,
                                                  const std::filesystem::path& out_dir, bool svg) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;

    const auto est = estimate_series(r.growth.params, table, r.growth.origin);
    struct Panel {
        const char* stem;
        const char* title;
        std::vector<double> observed;
        const std::vector<double>* estimated;
    };
    const Panel panels[] = {
        {"labor_fit", "Labor fitting", table.ln_labor(), &est.ln_labor},
        {"capital_fit", "Capital fitting", table.ln_capital(), &est.ln_capital},
        {"production_fit", "Production fitting", table.ln_output(), &est.ln_output},
    };
    for (const auto& p : panels) {
        write_file(out_dir / (std::string(p.stem) + ".csv"), fit_csv(table, p.observed, *p.estimated), written);
        if (svg) {
            write_file(out_dir / (std::string(p.stem) + ".svg"),
                       svg::render(fit_chart(p.title, table, p.observed, *p.estimated)), written);
        }
    }

    // Per-year H3 and the productivity it implies.
    {
        std::string s = "year,h3,tfp\n";
        std::vector<double> h3;
        std::vector<double> implied;
        for (const auto& v : r.h3.per_year) {
            const double a = tfp(v.value, r.solution);
            h3.push_back(v.value);
            implied.push_back(a);
            s += std::to_string(v.year) + "," + format_number(v.value) + "," + format_number(a) + "\n";
        }
        write_file(out_dir / "h3_series.csv", s, written);
        if (svg) {
            const auto years = years_of(table);
            const std::vector<double> level(years.size(), r.model.tfp());
            svg::Chart chart{
                .title = "Total factor productivity fitting",
                .x_label = "year",
                .y_label = "A",
                .series = {{"exp(H3/(a-b))", years, implied, "#1f77b4", true, true},
                           {"A from mean H3", years, level, "#d62728", false, true}},
            };
            write_file(out_dir / "h3_series.svg", svg::render(chart), written);
        }
    }

    // Observed vs estimated capital with the regression line.
    {
        const auto& fit = r.capital_observed_vs_estimated;
        const auto observed = table.ln_capital();
        std::string s = "# regression observed = intercept + slope * estimated: slope=" + format_number(fit.slope) +
                        ",intercept=" + format_number(fit.intercept) +
                        ",r_squared=" + (fit.r_squared ? format_number(*fit.r_squared) : "undefined") +
                        ",adjusted_r_squared=" +
                        (fit.adjusted_r_squared ? format_number(*fit.adjusted_r_squared) : "undefined") + "\n";
        s += "year,estimated,observed,regression\n";
        std::vector<double> line;
        for (std::size_t i = 0; i < table.size(); ++i) {
            line.push_back(fit.predict(est.ln_capital[i]));
            s += std::to_string(table[i].year) + "," + format_number(est.ln_capital[i]) + "," +
                 format_number(observed[i]) + "," + format_number(line.back()) + "\n";
        }
        write_file(out_dir / "capital_scatter.csv", s, written);
        if (svg) {
            svg::Chart chart{
                .title = "Observed vs estimated capital",
                .x_label = "estimated ln K",
                .y_label = "observed ln K",
                .series = {{"observations", est.ln_capital, observed, "#1f77b4", true, false},
                           {"regression", est.ln_capital, line, "#d62728", false, true}},
            };
            write_file(out_dir / "capital_scatter.svg", svg::render(chart), written);
        }
    }
    return written;
}

} // namespace cobbdouglas
