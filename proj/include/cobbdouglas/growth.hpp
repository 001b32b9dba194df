#pragma once

#include "cobbdouglas/dataset.hpp"
#include "cobbdouglas/regression.hpp"

#include <string>
#include <vector>

namespace cobbdouglas {

/// Growth rates of ln x_i = C_i + b_i t. Index convention: 1 = labor,
/// 2 = capital, 3 = output.
struct GrowthRates {
    double labor = 0.0;
    double capital = 0.0;
    double output = 0.0;
};

struct GrowthParams {
    double b_labor = 0.0;
    double C_labor = 0.0;
    double b_capital = 0.0;
    double C_capital = 0.0;
    double b_output = 0.0;
    double C_output = 0.0;

    GrowthRates rates() const { return {b_labor, b_capital, b_output}; }
};

/// Params plus the three underlying regressions.
struct GrowthFit {
    GrowthParams params;
    TimeOrigin origin = TimeOrigin::Zero;
    OlsFit labor;
    OlsFit capital;
    OlsFit output;
};

GrowthFit fit_growth(const SeriesTable& table, TimeOrigin origin = TimeOrigin::Zero);

struct EstimatedSeries {
    std::vector<double> time;
    std::vector<double> ln_labor;
    std::vector<double> ln_capital;
    std::vector<double> ln_output;

    static std::vector<double> levels(const std::vector<double>& logs);
};

/// ln x_i(t_j) = C_i + b_i t_j at every observation time.
EstimatedSeries estimate_series(const GrowthParams& params, const SeriesTable& table,
                                TimeOrigin origin = TimeOrigin::Zero);

struct OrderingCheck {
    bool holds = false;
    /// Empty when the ordering holds, otherwise the first inequality that failed.
    std::string violated;
};

/// b_capital > b_output > b_labor, strictly.
OrderingCheck check_ordering(const GrowthRates& rates);
inline OrderingCheck check_ordering(const GrowthParams& params) { return check_ordering(params.rates()); }

} // namespace cobbdouglas
