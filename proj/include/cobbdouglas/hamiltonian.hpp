#pragma once

#include "cobbdouglas/dataset.hpp"
#include "cobbdouglas/growth.hpp"

#include <array>
#include <utility>
#include <vector>

namespace cobbdouglas {

using Vec3 = std::array<double, 3>;

/// Solution (a, b) of the compatibility conditions
///   b*b1 + b2 + a*b3 = 0
///   b1 + a*b2 + b*b3 = 0
/// for the pair of Hamiltonians H1 = b ln x1 + ln x2 + a ln x3 and
/// H2 = ln x1 + a ln x2 + b ln x3. Only obtainable through solve_ab().
class BiHamiltonianSolution {
public:
    double a() const { return a_; }
    double b() const { return b_; }
    /// b3^2 - b1*b2
    double det() const { return det_; }
    double a_minus_b() const { return a_ - b_; }
    const GrowthRates& rates() const { return rates_; }

    /// Left-hand sides of the two conditions; both ~0.
    std::pair<double, double> condition_residuals() const;

private:
    friend BiHamiltonianSolution solve_ab(const GrowthRates&, double);
    BiHamiltonianSolution(double a, double b, double det, GrowthRates rates)
        : a_(a), b_(b), det_(det), rates_(rates) {}

    double a_;
    double b_;
    double det_;
    GrowthRates rates_;
};

inline constexpr double kDefaultDegeneracyTolerance = 1e-12;

/// Throws DegenerateError when |b3^2 - b1 b2| <= tol * max(|b1 b2|, b3^2).
BiHamiltonianSolution solve_ab(const GrowthRates& rates,
                               double relative_tolerance = kDefaultDegeneracyTolerance);

struct Elasticities {
    double alpha = 0.0;
    double beta = 0.0;
};

/// alpha = (b3-b1)/(b2-b1), beta = (b3-b2)/(b1-b2). Throws if b1 == b2.
Elasticities elasticities_from_rates(const GrowthRates& rates);

/// alpha = (a-1)/(a-b), beta = (1-b)/(a-b). Throws if a == b.
Elasticities elasticities_from_ab(double a, double b);
Elasticities elasticities_from_ab(const BiHamiltonianSolution& solution);

struct H3Value {
    int year = 0;
    double value = 0.0;
};

/// The first integral H3 = H1 - H2 = (b-1) ln L + (1-a) ln K + (a-b) ln Y
/// evaluated on every row.
struct H3Stats {
    Vec3 coefficients{};
    std::vector<H3Value> per_year;
    double mean = 0.0;
    /// divisor n - 1
    double variance = 0.0;
    /// divisor n
    double variance_population = 0.0;
};

H3Stats h3_series(const SeriesTable& table, const BiHamiltonianSolution& solution);
H3Stats h3_series(const SeriesTable& table, double a, double b);

/// A = exp(h3 / (a - b)). Throws DegenerateError if a == b.
double tfp(double h3_mean, double a_minus_b);
double tfp(double h3_mean, const BiHamiltonianSolution& solution);

/// Coefficients of H = sum c_k ln x_k for the single quadratic Poisson
/// structure pi^{ij} = -x_i x_j, from the rank-2 system A c = b with
///   A = [[0,-1,-1],[1,0,-1],[1,1,0]],
/// solvable only when b1 + b3 = b2. c3 is the free normalization.
struct HamiltonianCVector {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    GrowthRates rates;
    /// A c - b, componentwise
    Vec3 residual{};
    const char* free_parameter_note = "c3 fixed to the supplied normalization";
};

/// Throws InputError stating the defect b1 + b3 - b2 when it exceeds `tolerance`.
HamiltonianCVector single_hamiltonian_c(const GrowthRates& rates, double c3_normalization,
                                        double tolerance = 1e-9);

struct FieldCheck {
    /// pi dH at x
    Vec3 field{};
    /// field - (b1 x1, b2 x2, b3 x3)
    Vec3 residual{};
    /// max_i |residual_i| / max(|b_i x_i|, tiny)
    double max_relative_residual = 0.0;
};

/// Throws InputError when any coordinate is not strictly positive.
FieldCheck hamiltonian_field_check(const HamiltonianCVector& c, const Vec3& x);

/// dH1/dt, dH2/dt, dH3/dt along ln x_i = C_i + b_i t.
Vec3 conservation_check(double a, double b, const GrowthRates& rates);
Vec3 conservation_check(const BiHamiltonianSolution& solution, const GrowthRates& rates);

} // namespace cobbdouglas
