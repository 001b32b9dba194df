#include "cobbdouglas/report.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace cobbdouglas;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("pipeline on the embedded table") {
    const auto r = run_pipeline(embedded_table1());
    CHECK(r.ordering.holds);
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings.front().find("b1 + b3 = b2") != std::string::npos);
    CHECK(r.single_hamiltonian_defect == doctest::Approx(-0.0033).epsilon(0.05));
    CHECK(r.model.exp_labor() == r.elasticities.beta);
    CHECK(r.model.tfp() == doctest::Approx(1.01).epsilon(1e-3));
    CHECK(*r.capital_observed_vs_estimated.adjusted_r_squared == doctest::Approx(0.9934).epsilon(5e-4));
}

TEST_CASE("json schema and round trip") {
    const auto r = run_pipeline(embedded_table1());
    const auto text = format_json(r);
    const auto j = nlohmann::ordered_json::parse(text);
    for (const char* key : {"schema_version", "growth", "solution", "elasticities", "h3", "model", "crosscheck", "warnings"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["elasticities"]["alpha"].get<double>() == r.elasticities.alpha);
    CHECK(j["h3"]["per_year"].size() == 24);
    CHECK(j["growth"]["ordering"]["holds"] == true);
    CHECK(j["growth"]["ordering"]["violated"].is_null());
    CHECK(j["warnings"].size() == 1);

    // Byte-identical re-serialization and determinism.
    CHECK(j.dump(2) + "\n" == text);
    CHECK(format_json(run_pipeline(embedded_table1())) == text);
}

TEST_CASE("text report") {
    const auto text = format_text(run_pipeline(embedded_table1()));
    CHECK(text.find("b_capital > b_output > b_labor: holds") != std::string::npos);
    CHECK(text.find("alpha = ") != std::string::npos);
    CHECK(text.find("Warnings") != std::string::npos);
    // Narrative order: growth fits, then (a, b), then H3, then A.
    CHECK(text.find("Exponential growth") < text.find("Bi-Hamiltonian"));
    CHECK(text.find("Bi-Hamiltonian") < text.find("First integral"));
    CHECK(text.find("First integral") < text.find("Cobb-Douglas model"));
}

TEST_CASE("ordering violation produces a warning") {
    std::vector<Observation> obs;
    // labor fastest, capital slowest
    for (int j = 0; j < 10; ++j) obs.push_back({1900 + j, 4.6 + 0.03 * j + 0.01 * (j % 2), 4.6 + 0.01 * j, 4.6 + 0.05 * j});
    const auto r = run_pipeline(SeriesTable(obs));
    CHECK_FALSE(r.ordering.holds);
    bool found = false;
    for (const auto& w : r.warnings) found |= w.find("ordering") != std::string::npos;
    CHECK(found);
}

TEST_CASE("format_number round-trips") {
    for (double v : {0.1, 1.00996795211, -9.104630098, 1e-300, 123456789.0}) {
        CHECK(std::stod(format_number(v)) == v);
    }
}

TEST_CASE("figure export") {
    const std::filesystem::path dir = CD_TEST_OUTPUT_DIR;
    std::filesystem::remove_all(dir);
    const auto table = embedded_table1();
    const auto r = run_pipeline(table);
    const auto files = export_figures(r, table, dir);
    CHECK(files.size() == 10);

    const auto capital = lines_of(slurp(dir / "capital_fit.csv"));
    REQUIRE(capital.size() == 25);
    CHECK(capital.front() == "year,observed,estimated");
    CHECK(capital[1].rfind("1899,4.60517,", 0) == 0);

    const auto h3 = lines_of(slurp(dir / "h3_series.csv"));
    REQUIRE(h3.size() == 25);
    CHECK(h3.front() == "year,h3,tfp");
    const auto first = h3[1];
    const auto c1 = first.find(',');
    const auto c2 = first.find(',', c1 + 1);
    CHECK(first.substr(0, c1) == "1899");
    CHECK(std::abs(std::stod(first.substr(c1 + 1, c2 - c1 - 1))) < 1e-9);

    const auto scatter = lines_of(slurp(dir / "capital_scatter.csv"));
    REQUIRE(scatter.size() == 26);
    const auto pos = scatter.front().find("adjusted_r_squared=");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(scatter.front().substr(pos + 19)) == doctest::Approx(0.9934).epsilon(5e-4));

    const auto svg = slurp(dir / "capital_fit.svg");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);

    // Deterministic output.
    const auto before = slurp(dir / "capital_scatter.csv");
    export_figures(r, table, dir);
    CHECK(slurp(dir / "capital_scatter.csv") == before);
}
