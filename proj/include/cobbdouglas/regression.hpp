#pragma once

#include <optional>
#include <span>
#include <vector>

namespace cobbdouglas {

/// Simple linear regression y = intercept + slope * x.
///
/// `r_squared` and `adjusted_r_squared` are empty when the response is
/// constant (zero total sum of squares), where R^2 is undefined.
struct OlsFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t n = 0;
    std::vector<double> residuals;
    double sse = 0.0;
    double sst = 0.0;
    std::optional<double> r_squared;
    std::optional<double> adjusted_r_squared;

    double predict(double x) const { return intercept + slope * x; }
};

/// Closed-form least squares. Throws InputError on length mismatch or
/// n < 3, DegenerateError when x has zero variance.
OlsFit ols_fit(std::span<const double> x, std::span<const double> y);

/// Regresses observed on estimated (observed = intercept + slope * estimated).
OlsFit observed_vs_estimated_fit(std::span<const double> observed,
                                 std::span<const double> estimated);

/// Sum of squared residuals of an arbitrary line; used by the tests' oracle
/// and by residual reports.
double sum_squared_error(std::span<const double> x, std::span<const double> y,
                         double slope, double intercept);

} // namespace cobbdouglas
