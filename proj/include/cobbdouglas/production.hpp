#pragma once

#include "cobbdouglas/dataset.hpp"
#include "cobbdouglas/hamiltonian.hpp"
#include "cobbdouglas/regression.hpp"

#include <vector>

namespace cobbdouglas {

/// Y = A L^exp_labor K^exp_capital with exp_labor + exp_capital = 1.
class CobbDouglasModel {
public:
    /// Throws InputError if tfp <= 0 or the exponents do not sum to 1 (1e-12).
    CobbDouglasModel(double tfp, double exp_labor, double exp_capital);

    double tfp() const { return tfp_; }
    double exp_labor() const { return exp_labor_; }
    double exp_capital() const { return exp_capital_; }

private:
    double tfp_;
    double exp_labor_;
    double exp_capital_;
};

/// beta goes on labor and alpha on capital, which lines the fitted exponents
/// up with the 1928 L^{3/4} K^{1/4} form.
CobbDouglasModel build_model(const Elasticities& elasticities, double tfp);

double predict_log_output(const CobbDouglasModel& model, double ln_labor, double ln_capital);

/// A L^el K^ek in levels; exponents are not required to sum to one.
/// Throws InputError unless L, K > 0.
double predict_output(double tfp, double exp_labor, double exp_capital, double labor, double capital);

struct ConstrainedFit {
    double k = 0.0;
    double tfp = 0.0;
    OlsFit fit;
};

/// ln(Y/K) = ln A + k ln(L/K): the constant-returns form A L^k K^{1-k}.
ConstrainedFit constrained_cd_fit(const SeriesTable& table);

struct ResidualRow {
    int year = 0;
    double observed = 0.0;
    double predicted = 0.0;
    double residual = 0.0;
};

struct ResidualReport {
    std::vector<ResidualRow> rows;
    double sse = 0.0;
    double max_abs_residual = 0.0;
};

ResidualReport residual_report(const CobbDouglasModel& model, const SeriesTable& table);

} // namespace cobbdouglas
