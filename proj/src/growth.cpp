#include "cobbdouglas/growth.hpp"

#include <cmath>

namespace cobbdouglas {

GrowthFit fit_growth(const SeriesTable& table, TimeOrigin origin) {
    const auto t = time_index(table, origin);
    GrowthFit g;
    g.origin = origin;
    g.labor = ols_fit(t, table.ln_labor());
    g.capital = ols_fit(t, table.ln_capital());
    g.output = ols_fit(t, table.ln_output());
    g.params = {
        .b_labor = g.labor.slope,
        .C_labor = g.labor.intercept,
        .b_capital = g.capital.slope,
        .C_capital = g.capital.intercept,
        .b_output = g.output.slope,
        .C_output = g.output.intercept,
    };
    return g;
}

std::vector<double> EstimatedSeries::levels(const std::vector<double>& logs) {
    std::vector<double> out;
    out.reserve(logs.size());
    for (double v : logs) out.push_back(std::exp(v));
    return out;
}

EstimatedSeries estimate_series(const GrowthParams& p, const SeriesTable& table, TimeOrigin origin) {
    EstimatedSeries est;
    est.time = time_index(table, origin);
    for (double t : est.time) {
        est.ln_labor.push_back(p.C_labor + p.b_labor * t);
        est.ln_capital.push_back(p.C_capital + p.b_capital * t);
        est.ln_output.push_back(p.C_output + p.b_output * t);
    }
    return est;
}

OrderingCheck check_ordering(const GrowthRates& r) {
    if (!(r.capital > r.output)) return {false, "b_capital > b_output"};
    if (!(r.output > r.labor)) return {false, "b_output > b_labor"};
    return {true, {}};
}

} // namespace cobbdouglas
