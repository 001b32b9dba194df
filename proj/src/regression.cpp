#include "cobbdouglas/regression.hpp"

#include "cobbdouglas/errors.hpp"

#include <cmath>
#include <string>

namespace cobbdouglas {

namespace {

double mean(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

} // namespace

OlsFit ols_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw InputError("length mismatch: " + std::to_string(x.size()) + " regressor values vs " +
                         std::to_string(y.size()) + " responses");
    }
    if (x.size() < 3) throw InputError("regression needs at least 3 points, got " + std::to_string(x.size()));

    const std::size_t n = x.size();
    const double x_bar = mean(x);
    const double y_bar = mean(y);

    // Centered sums; two-pass for accuracy.
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - x_bar;
        const double dy = y[i] - y_bar;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0)) throw DegenerateError("degenerate regressor: zero variance");

    OlsFit fit;
    fit.n = n;
    fit.slope = sxy / sxx;
    fit.intercept = y_bar - fit.slope * x_bar;
    fit.residuals.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        fit.residuals[i] = y[i] - fit.predict(x[i]);
        fit.sse += fit.residuals[i] * fit.residuals[i];
    }
    fit.sst = syy;
    if (syy > 0.0) {
        const double r2 = 1.0 - fit.sse / syy;
        fit.r_squared = r2;
        fit.adjusted_r_squared = 1.0 - (1.0 - r2) * static_cast<double>(n - 1) / static_cast<double>(n - 2);
    }
    return fit;
}

OlsFit observed_vs_estimated_fit(std::span<const double> observed, std::span<const double> estimated) {
    return ols_fit(estimated, observed);
}

double sum_squared_error(std::span<const double> x, std::span<const double> y, double slope, double intercept) {
    double sse = 0.0;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        const double e = y[i] - (intercept + slope * x[i]);
        sse += e * e;
    }
    return sse;
}

} // namespace cobbdouglas
