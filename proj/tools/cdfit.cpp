// cdfit: exponential-growth / bi-Hamiltonian Cobb-Douglas estimation.
//
//   cdfit fit [embedded | PATH] [--input PATH | --embedded] [--raw-levels]
//             [--format json|text] [--export DIR] [--no-svg] [--time-origin zero|one]
//   cdfit predict --tfp A --exp-labor EL --exp-capital EK --labor L --capital K
//
// Exit codes: 0 success, 1 input error, 2 numeric degeneracy.

#include "cobbdouglas/dataset.hpp"
#include "cobbdouglas/errors.hpp"
#include "cobbdouglas/production.hpp"
#include "cobbdouglas/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace cd = cobbdouglas;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitDegenerate = 2;

struct FitOptions {
    std::string positional;
    std::string input;
    bool embedded = false;
    bool raw_levels = false;
    std::string format = "text";
    std::string export_dir;
    bool no_svg = false;
    std::string time_origin = "zero";
};

cd::SeriesTable load_table(const FitOptions& opt) {
    std::string path = opt.input;
    if (path.empty() && !opt.positional.empty() && opt.positional != "embedded") path = opt.positional;
    if (opt.embedded || path.empty()) {
        if (!path.empty()) throw cd::InputError("--embedded and an input path are mutually exclusive");
        return cd::embedded_table1();
    }
    std::ifstream in(path);
    if (!in) throw cd::InputError("cannot open input file: " + path);
    try {
        return cd::parse_csv(in, !opt.raw_levels);
    } catch (const cd::InputError& e) {
        throw cd::InputError(path + ": " + e.what());
    }
}

int run_fit(const FitOptions& opt) {
    const auto table = load_table(opt);
    const auto origin = opt.time_origin == "one" ? cd::TimeOrigin::One : cd::TimeOrigin::Zero;
    const auto report = cd::run_pipeline(table, origin);
    std::cout << (opt.format == "json" ? cd::format_json(report) : cd::format_text(report));
    if (!opt.export_dir.empty()) {
        const auto files = cd::export_figures(report, table, opt.export_dir, !opt.no_svg);
        for (const auto& f : files) std::cerr << "wrote " << f.string() << "\n";
    }
    return 0;
}

struct PredictOptions {
    double tfp = 0.0;
    double exp_labor = 0.0;
    double exp_capital = 0.0;
    double labor = 0.0;
    double capital = 0.0;
};

int run_predict(const PredictOptions& opt) {
    if (std::abs(opt.exp_labor + opt.exp_capital - 1.0) > 1e-9) {
        std::cerr << "warning: exponents sum to " << cd::format_number(opt.exp_labor + opt.exp_capital)
                  << ", not 1 (returns to scale are not constant)\n";
    }
    const double y = cd::predict_output(opt.tfp, opt.exp_labor, opt.exp_capital, opt.labor, opt.capital);
    std::cout << cd::format_number(y) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cobb-Douglas estimation from exponential growth fits"};
    app.require_subcommand(1);

    FitOptions fit;
    auto* fit_cmd = app.add_subcommand("fit", "Run the full estimation pipeline and print the report");
    fit_cmd->add_option("source", fit.positional, "'embedded' or a CSV path");
    auto* input_opt = fit_cmd->add_option("--input", fit.input, "CSV file with header year,output,capital,labor");
    fit_cmd->add_flag("--embedded", fit.embedded, "Use the built-in 1899-1922 series")->excludes(input_opt);
    fit_cmd->add_flag("--raw-levels", fit.raw_levels, "Input values are index levels; take natural logs");
    fit_cmd->add_option("--format", fit.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    fit_cmd->add_option("--export", fit.export_dir, "Write figure CSV/SVG files into this directory");
    fit_cmd->add_flag("--no-svg", fit.no_svg, "Only write CSV files when exporting");
    fit_cmd->add_option("--time-origin", fit.time_origin, "t = year - first_year (+1 for 'one')")
        ->check(CLI::IsMember({"zero", "one"}));

    PredictOptions pred;
    auto* pred_cmd = app.add_subcommand("predict", "Evaluate Y = A L^el K^ek");
    pred_cmd->add_option("--tfp", pred.tfp, "Total factor productivity A")->required();
    pred_cmd->add_option("--exp-labor", pred.exp_labor, "Exponent on labor")->required();
    pred_cmd->add_option("--exp-capital", pred.exp_capital, "Exponent on capital")->required();
    pred_cmd->add_option("--labor", pred.labor, "Labor L (> 0)")->required();
    pred_cmd->add_option("--capital", pred.capital, "Capital K (> 0)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (*fit_cmd) return run_fit(fit);
        return run_predict(pred);
    } catch (const cd::DegenerateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
