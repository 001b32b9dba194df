#include "cobbdouglas/production.hpp"

#include "cobbdouglas/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cobbdouglas {

CobbDouglasModel::CobbDouglasModel(double tfp, double exp_labor, double exp_capital)
    : tfp_(tfp), exp_labor_(exp_labor), exp_capital_(exp_capital) {
    if (!(tfp > 0.0) || !std::isfinite(tfp)) throw InputError("total factor productivity must be positive");
    if (!std::isfinite(exp_labor) || !std::isfinite(exp_capital) ||
        std::abs(exp_labor + exp_capital - 1.0) > 1e-12) {
        throw InputError("exponents must sum to 1 (constant returns to scale)");
    }
}

CobbDouglasModel build_model(const Elasticities& e, double tfp) {
    return CobbDouglasModel(tfp, e.beta, e.alpha);
}

double predict_log_output(const CobbDouglasModel& m, double ln_labor, double ln_capital) {
    return std::log(m.tfp()) + m.exp_labor() * ln_labor + m.exp_capital() * ln_capital;
}

double predict_output(double tfp, double exp_labor, double exp_capital, double labor, double capital) {
    if (!(labor > 0.0) || !(capital > 0.0)) throw InputError("labor and capital must be positive");
    if (!(tfp > 0.0)) throw InputError("total factor productivity must be positive");
    return tfp * std::pow(labor, exp_labor) * std::pow(capital, exp_capital);
}

ConstrainedFit constrained_cd_fit(const SeriesTable& table) {
    std::vector<double> x;
    std::vector<double> y;
    x.reserve(table.size());
    y.reserve(table.size());
    for (const auto& o : table.observations()) {
        x.push_back(o.ln_labor - o.ln_capital);
        y.push_back(o.ln_output - o.ln_capital);
    }
    ConstrainedFit out;
    try {
        out.fit = ols_fit(x, y);
    } catch (const DegenerateError&) {
        throw DegenerateError("constrained Cobb-Douglas fit: degenerate regressor (ln L = ln K every year)");
    }
    out.k = out.fit.slope;
    out.tfp = std::exp(out.fit.intercept);
    return out;
}

ResidualReport residual_report(const CobbDouglasModel& model, const SeriesTable& table) {
    ResidualReport rep;
    rep.rows.reserve(table.size());
    for (const auto& o : table.observations()) {
        const double pred = predict_log_output(model, o.ln_labor, o.ln_capital);
        const double res = o.ln_output - pred;
        rep.rows.push_back({o.year, o.ln_output, pred, res});
        rep.sse += res * res;
        rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(res));
    }
    return rep;
}

} // namespace cobbdouglas
