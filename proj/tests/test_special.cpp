#include <doctest.h>

#include <cmath>

#include "massent/errors.hpp"
#include "massent/numeric.hpp"
#include "massent/special.hpp"

using namespace massent;

TEST_CASE("log_gamma matches high-precision references at integer and half-integer arguments") {
    // reference values computed with 25-digit arithmetic
    const struct {
        double x, ref;
    } table[] = {
        {0.5, 0.5723649429247000871},   {1.0, 0.0},
        {1.5, -0.1207822376352452223},  {2.0, 0.0},
        {2.5, 0.2846828704729191596},   {3.0, 0.6931471805599453094},
        {3.5, 1.200973602347074225},    {5.0, 3.17805383034794562},
        {7.5, 7.534364236758732955},    {10.0, 12.80182748008146961},
        {12.5, 18.7343475119364457},    {20.5, 40.83150097453079811},
        {50.0, 144.565743946344886},    {100.5, 361.4355404677776216},
        {150.0, 600.0094705553274281},  {171.5, 709.1431630309282423},
        {201.0, 863.2319871924054735},
    };
    for (const auto& [x, ref] : table) {
        double got = log_gamma(x);
        CHECK(std::abs(got - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("log_gamma rejects nonpositive arguments") {
    CHECK_THROWS_AS(log_gamma(0.0), ParameterError);
    CHECK_THROWS_AS(log_gamma(-1.5), ParameterError);
}

TEST_CASE("log_factorial and log_binomial") {
    CHECK(log_factorial(0) == doctest::Approx(0.0));
    CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
    CHECK(std::exp(log_binomial(10, 3)) == doctest::Approx(120.0).epsilon(1e-12));
    CHECK(std::exp(log_binomial(2000, 1000) - log_binomial(2000, 999)) ==
          doctest::Approx(1001.0 / 1000.0).epsilon(1e-10));
    CHECK_THROWS_AS(log_binomial(3, 5), ParameterError);
}

TEST_CASE("gauss constant via AGM") {
    CHECK(std::abs(gauss_constant() - 0.834626841674073186) < 1e-15);
    CHECK(agm(1.0, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("compensated summation keeps 1e5 terms accurate") {
    CompensatedSum acc;
    const int n = 100000;
    for (int i = 0; i < n; ++i) acc += 0.1;
    CHECK(std::abs(acc.value() - 0.1 * n) < 1e-10);

    // alternating large/small cancellation
    CompensatedSum c2;
    c2 += 1e16;
    for (int i = 0; i < 1000; ++i) c2 += 1.0;
    c2 += -1e16;
    CHECK(c2.value() == doctest::Approx(1000.0).epsilon(1e-12));
}
