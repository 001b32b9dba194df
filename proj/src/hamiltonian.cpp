#include "cobbdouglas/hamiltonian.hpp"

#include "cobbdouglas/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace cobbdouglas {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

std::pair<double, double> BiHamiltonianSolution::condition_residuals() const {
    const auto& r = rates_;
    return {b_ * r.labor + r.capital + a_ * r.output, r.labor + a_ * r.capital + b_ * r.output};
}

BiHamiltonianSolution solve_ab(const GrowthRates& rates, double relative_tolerance) {
    const double b1 = rates.labor;
    const double b2 = rates.capital;
    const double b3 = rates.output;

    // Unknowns (a, b):  b3*a + b1*b = -b2,  b2*a + b3*b = -b1.
    const double det = b3 * b3 - b1 * b2;
    const double scale = std::max(std::abs(b1 * b2), b3 * b3);
    if (!(std::abs(det) > relative_tolerance * scale)) {
        throw DegenerateError("degenerate bi-Hamiltonian system: b3^2 - b1*b2 = " + fmt(det) +
                              " (growth rates " + fmt(b1) + ", " + fmt(b2) + ", " + fmt(b3) + ")");
    }
    const double a = (b1 * b1 - b2 * b3) / det;
    const double b = (b2 * b2 - b1 * b3) / det;
    return BiHamiltonianSolution(a, b, det, rates);
}

Elasticities elasticities_from_rates(const GrowthRates& r) {
    if (r.labor == r.capital) throw DegenerateError("labor and capital growth rates coincide; elasticities undefined");
    const double alpha = (r.output - r.labor) / (r.capital - r.labor);
    return {alpha, 1.0 - alpha};
}

Elasticities elasticities_from_ab(double a, double b) {
    if (a == b) throw DegenerateError("a == b; elasticities undefined");
    const double alpha = (a - 1.0) / (a - b);
    const double beta = (1.0 - b) / (a - b);
    return {alpha, beta};
}

Elasticities elasticities_from_ab(const BiHamiltonianSolution& s) {
    return elasticities_from_ab(s.a(), s.b());
}

H3Stats h3_series(const SeriesTable& table, double a, double b) {
    H3Stats st;
    st.coefficients = {b - 1.0, 1.0 - a, a - b};
    const auto& [cl, ck, cy] = st.coefficients;
    st.per_year.reserve(table.size());
    double sum = 0.0;
    for (const auto& o : table.observations()) {
        const double h = cl * o.ln_labor + ck * o.ln_capital + cy * o.ln_output;
        st.per_year.push_back({o.year, h});
        sum += h;
    }
    const auto n = static_cast<double>(st.per_year.size());
    st.mean = sum / n;
    double ss = 0.0;
    for (const auto& v : st.per_year) ss += (v.value - st.mean) * (v.value - st.mean);
    st.variance = ss / (n - 1.0);
    st.variance_population = ss / n;
    return st;
}

H3Stats h3_series(const SeriesTable& table, const BiHamiltonianSolution& s) {
    return h3_series(table, s.a(), s.b());
}

double tfp(double h3_mean, double a_minus_b) {
    if (a_minus_b == 0.0) throw DegenerateError("a == b; total factor productivity undefined");
    return std::exp(h3_mean / a_minus_b);
}

double tfp(double h3_mean, const BiHamiltonianSolution& s) {
    return tfp(h3_mean, s.a_minus_b());
}

HamiltonianCVector single_hamiltonian_c(const GrowthRates& r, double c3_normalization, double tolerance) {
    const double defect = r.labor + r.output - r.capital;
    if (std::abs(defect) > tolerance) {
        throw InputError("inconsistent single-Hamiltonian system: b1 + b3 = b2 violated, defect b1 + b3 - b2 = " +
                         fmt(defect));
    }
    HamiltonianCVector c;
    c.rates = r;
    c.c3 = c3_normalization;
    c.c1 = r.capital + c.c3;  // row 2: c1 - c3 = b2
    c.c2 = r.output - c.c1;   // row 3: c1 + c2 = b3
    c.residual = {
        -(c.c2 + c.c3) - r.labor,
        c.c1 - c.c3 - r.capital,
        c.c1 + c.c2 - r.output,
    };
    return c;
}

FieldCheck hamiltonian_field_check(const HamiltonianCVector& c, const Vec3& x) {
    for (double xi : x) {
        if (!(xi > 0.0)) throw InputError("field check requires strictly positive coordinates");
    }
    // pi^{ij} = -x_i x_j for i < j, antisymmetric; dH = (c_k / x_k).
    std::array<std::array<double, 3>, 3> pi{};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            pi[i][j] = -x[i] * x[j];
            pi[j][i] = x[i] * x[j];
        }
    }
    const Vec3 grad = {c.c1 / x[0], c.c2 / x[1], c.c3 / x[2]};
    const Vec3 rates = {c.rates.labor, c.rates.capital, c.rates.output};

    FieldCheck out;
    for (int i = 0; i < 3; ++i) {
        double f = 0.0;
        for (int l = 0; l < 3; ++l) f += pi[i][l] * grad[l];
        out.field[i] = f;
        const double target = rates[i] * x[i];
        out.residual[i] = f - target;
        const double denom = std::max(std::abs(target), std::numeric_limits<double>::min());
        out.max_relative_residual = std::max(out.max_relative_residual, std::abs(out.residual[i]) / denom);
    }
    return out;
}

Vec3 conservation_check(double a, double b, const GrowthRates& r) {
    // d(ln x_i)/dt = b_i along the flow.
    const double dh1 = b * r.labor + r.capital + a * r.output;
    const double dh2 = r.labor + a * r.capital + b * r.output;
    return {dh1, dh2, dh1 - dh2};
}

Vec3 conservation_check(const BiHamiltonianSolution& s, const GrowthRates& r) {
    return conservation_check(s.a(), s.b(), r);
}

} // namespace cobbdouglas
