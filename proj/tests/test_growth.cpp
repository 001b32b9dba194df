#include "cobbdouglas/growth.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace cobbdouglas;

namespace {

SeriesTable exponential_table(int first_year, int n, GrowthParams p) {
    std::vector<Observation> obs;
    for (int j = 0; j < n; ++j) {
        const double t = j;
        obs.push_back({first_year + j, p.C_output + p.b_output * t, p.C_capital + p.b_capital * t,
                       p.C_labor + p.b_labor * t});
    }
    return SeriesTable(std::move(obs));
}

} // namespace

TEST_CASE("Table 1 growth fit is close to the reference rates") {
    const auto g = fit_growth(embedded_table1());
    const auto& p = g.params;
    // Reference values; the printed table agrees to about 1e-5 on the slopes.
    CHECK(std::abs(p.b_labor - 0.02549605) < 1e-5);
    CHECK(std::abs(p.b_capital - 0.06472564) < 1e-5);
    CHECK(std::abs(p.b_output - 0.03592651) < 1e-5);
    CHECK(std::abs(p.C_labor - 4.66953290) < 1e-4);
    CHECK(std::abs(p.C_capital - 4.61213588) < 1e-4);
    CHECK(std::abs(p.C_output - 4.66415363) < 1e-4);
    CHECK(g.labor.sse < 1.0);
    CHECK(g.capital.sse < 1.0);
    CHECK(g.output.sse < 1.0);
}

TEST_CASE("exact exponential data is recovered") {
    const GrowthParams truth{0.05, 4.6, 0.05, 4.6, 0.05, 4.6};
    const auto g = fit_growth(exponential_table(1899, 24, truth));
    CHECK(g.params.b_labor == doctest::Approx(0.05));
    CHECK(g.params.C_capital == doctest::Approx(4.6));
    CHECK(g.params.b_output == doctest::Approx(0.05));
    CHECK(g.output.sse < 1e-20);
}

TEST_CASE("property: random exact exponential tables recover params to 1e-10") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> rate(-0.2, 0.2), level(0.0, 10.0);
    std::uniform_int_distribution<int> len(3, 60);
    for (int trial = 0; trial < 100; ++trial) {
        const GrowthParams truth{rate(rng), level(rng), rate(rng), level(rng), rate(rng), level(rng)};
        const auto g = fit_growth(exponential_table(1900, len(rng), truth));
        CHECK(std::abs(g.params.b_labor - truth.b_labor) < 1e-10);
        CHECK(std::abs(g.params.C_labor - truth.C_labor) < 1e-10);
        CHECK(std::abs(g.params.b_capital - truth.b_capital) < 1e-10);
        CHECK(std::abs(g.params.C_capital - truth.C_capital) < 1e-10);
        CHECK(std::abs(g.params.b_output - truth.b_output) < 1e-10);
        CHECK(std::abs(g.params.C_output - truth.C_output) < 1e-10);
    }
}

TEST_CASE("estimate_series") {
    const auto table = embedded_table1();
    const auto g = fit_growth(table);
    const auto est = estimate_series(g.params, table);
    CHECK(est.ln_capital.front() == g.params.C_capital);
    CHECK(est.ln_labor.front() == g.params.C_labor);

    // Residuals match the regression's own residuals exactly.
    const auto k = table.ln_capital();
    const auto l = table.ln_labor();
    const auto y = table.ln_output();
    for (std::size_t j = 0; j < table.size(); ++j) {
        CHECK(std::abs((k[j] - est.ln_capital[j]) - g.capital.residuals[j]) < 1e-12);
        CHECK(std::abs((l[j] - est.ln_labor[j]) - g.labor.residuals[j]) < 1e-12);
        CHECK(std::abs((y[j] - est.ln_output[j]) - g.output.residuals[j]) < 1e-12);
    }
    double sse = 0.0;
    for (std::size_t j = 0; j < table.size(); ++j) sse += std::pow(k[j] - est.ln_capital[j], 2);
    CHECK(sse < 1.0);

    const auto lv = EstimatedSeries::levels(est.ln_capital);
    CHECK(lv.front() == doctest::Approx(std::exp(g.params.C_capital)));
}

TEST_CASE("check_ordering") {
    CHECK(check_ordering(fit_growth(embedded_table1()).params).holds);

    const auto capital_slowest = check_ordering(GrowthRates{.labor = 0.05, .capital = 0.02, .output = 0.03});
    CHECK_FALSE(capital_slowest.holds);
    CHECK(capital_slowest.violated == "b_capital > b_output");

    const auto labor_fastest = check_ordering(GrowthRates{.labor = 0.04, .capital = 0.06, .output = 0.03});
    CHECK_FALSE(labor_fastest.holds);
    CHECK(labor_fastest.violated == "b_output > b_labor");

    CHECK_FALSE(check_ordering(GrowthRates{0.03, 0.03, 0.03}).holds);
}
