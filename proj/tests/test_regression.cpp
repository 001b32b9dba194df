#include "cobbdouglas/dataset.hpp"
#include "cobbdouglas/errors.hpp"
#include "cobbdouglas/regression.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

using namespace cobbdouglas;

TEST_CASE("exact line") {
    const std::vector<double> t{0, 1, 2}, y{1, 3, 5};
    const auto f = ols_fit(t, y);
    CHECK(f.slope == doctest::Approx(2.0));
    CHECK(f.intercept == doctest::Approx(1.0));
    CHECK(f.sse == doctest::Approx(0.0));
    REQUIRE(f.r_squared);
    CHECK(*f.r_squared == doctest::Approx(1.0));
    CHECK(f.n == 3);
}

TEST_CASE("constant response flags R^2 as undefined") {
    const std::vector<double> t{0, 1, 2, 3}, y{0, 0, 0, 0};
    const auto f = ols_fit(t, y);
    CHECK(f.slope == 0.0);
    CHECK(f.intercept == 0.0);
    CHECK(f.sse == 0.0);
    CHECK_FALSE(f.r_squared.has_value());
    CHECK_FALSE(f.adjusted_r_squared.has_value());
}

TEST_CASE("errors") {
    const std::vector<double> three{1, 2, 3};
    CHECK_THROWS_AS(ols_fit(std::vector<double>{1, 1, 1}, three), DegenerateError);
    CHECK_THROWS_AS(ols_fit(std::vector<double>{1, 2}, three), InputError);
    CHECK_THROWS_AS(ols_fit(std::vector<double>{1, 2}, std::vector<double>{1, 2}), InputError);
}

TEST_CASE("capital column against the reference Table 1 fit") {
    const auto table = embedded_table1();
    const auto f = ols_fit(time_index(table), table.ln_capital());
    // Reference: slope 0.06472564, intercept 4.61213588. The printed 6-decimal
    // table reproduces these only to ~1e-5 / ~1e-4.
    CHECK(f.slope == doctest::Approx(0.06472564).epsilon(1e-4));
    CHECK(f.intercept == doctest::Approx(4.61213588).epsilon(1e-4));
}

TEST_CASE("observed vs estimated") {
    const std::vector<double> est{1.0, 2.5, 2.0, 4.0, 7.0};
    SUBCASE("identity") {
        const auto f = observed_vs_estimated_fit(est, est);
        CHECK(f.slope == doctest::Approx(1.0));
        CHECK(f.intercept == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(*f.r_squared == doctest::Approx(1.0));
    }
    SUBCASE("affine") {
        std::vector<double> obs;
        for (double e : est) obs.push_back(2.0 * e + 3.0);
        const auto f = observed_vs_estimated_fit(obs, est);
        CHECK(f.slope == doctest::Approx(2.0));
        CHECK(f.intercept == doctest::Approx(3.0));
        CHECK(*f.r_squared == doctest::Approx(1.0));
    }
}

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

} // namespace

TEST_CASE("property: fit diagnostics invariants") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> len(3, 12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = len(rng);
        const auto x = random_vec(rng, n, -10, 10);
        const auto y = random_vec(rng, n, -10, 10);
        const auto f = ols_fit(x, y);
        const double rsum = std::accumulate(f.residuals.begin(), f.residuals.end(), 0.0);
        CHECK(std::abs(rsum) < 1e-9);
        REQUIRE(f.r_squared);
        CHECK(*f.r_squared >= -1e-12);
        CHECK(*f.r_squared <= 1.0 + 1e-12);
        CHECK(*f.adjusted_r_squared <= *f.r_squared + 1e-15);
        CHECK(f.sse == doctest::Approx(sum_squared_error(x, y, f.slope, f.intercept)));
    }
}

TEST_CASE("property: shift invariance and scale equivariance of the slope") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> shift(-100, 100);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = random_vec(rng, 8, -10, 10);
        const auto y = random_vec(rng, 8, -10, 10);
        const double c = shift(rng);
        const double a = shift(rng) / 10.0;
        std::vector<double> xs = x, ys = y;
        for (auto& v : xs) v += c;
        for (auto& v : ys) v *= a;
        const auto base = ols_fit(x, y);
        CHECK(std::abs(ols_fit(xs, y).slope - base.slope) < 1e-12);
        CHECK(std::abs(ols_fit(x, ys).slope - a * base.slope) < 1e-12);
    }
}

#include "oracles.hpp"

TEST_CASE("property: grid-search oracle never beats the closed form") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::size_t> len(3, 12);
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = len(rng);
        const auto x = random_vec(rng, n, -10, 10);
        const auto y = random_vec(rng, n, -10, 10);
        const auto f = ols_fit(x, y);
        CHECK(oracle::grid_min_sse(x, y, f.slope, f.intercept) >= f.sse - 1e-9);

        const auto ne = oracle::normal_equations(x, y);
        CHECK(f.slope == doctest::Approx(ne[0]).epsilon(1e-9));
        CHECK(f.intercept == doctest::Approx(ne[1]).epsilon(1e-9));
    }
}
