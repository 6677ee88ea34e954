#include <doctest.h>

#include <cmath>

#include "massent/errors.hpp"
#include "massent/numeric.hpp"
#include "massent/poisson_sum.hpp"
#include "massent/quadrature.hpp"

using namespace massent;

TEST_CASE("every pair has unit total mass") {
    quad::Options qo;
    qo.abs_tol = 1e-13;
    for (auto pair : {FourierPair::gauss(0.4, 1.3), FourierPair::two_sided_exponential(2.0),
                      FourierPair::cauchy_half(0.4, 1.3),
                      FourierPair::sq_cauchy_two_thirds(0.4, 1.3)}) {
        CAPTURE(pair.label());
        CHECK(pair.transform_radial(0.0) == 1.0);
        auto mass = quad::integrate_line([&pair](double x) { return pair.spatial(x); }, qo);
        CHECK(mass.converged);
        CHECK(mass.value == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("gauss lattice sums") {
    auto pair = FourierPair::gauss(0.0, 1.0);
    double expected = 1.0 + 2.0 * std::exp(-2.0 * kPi * kPi);  // theta-series form
    CHECK(direct_sum(pair) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(transformed_sum(pair) == doctest::Approx(expected).epsilon(1e-13));

    // half-integer shift flips the leading cosine
    auto shifted = FourierPair::gauss(0.5, 1.0);
    CHECK(transformed_sum(shifted) ==
          doctest::Approx(1.0 - 2.0 * std::exp(-2.0 * kPi * kPi)).epsilon(1e-13));
    CHECK(direct_sum(shifted) == doctest::Approx(transformed_sum(shifted)).epsilon(1e-13));
}

TEST_CASE("two-sided exponential lattice sum against the geometric closed form") {
    for (double mu : {0.4, 1.0, 10.0}) {
        auto pair = FourierPair::two_sided_exponential(mu);
        double q = std::exp(-1.0 / mu);
        double closed = (1.0 / (2.0 * mu)) * ((1.0 + q) / (1.0 - q));
        CHECK(direct_sum(pair) == doctest::Approx(closed).epsilon(1e-13));
        CHECK(transformed_sum(pair) == doctest::Approx(closed).epsilon(1e-11));
    }
    // spec value at mu = 10
    CHECK(direct_sum(FourierPair::two_sided_exponential(10.0)) ==
          doctest::Approx(1.000833194477505).epsilon(1e-12));
}

TEST_CASE("cauchy lattice sums") {
    auto pair = FourierPair::cauchy_half(0.0, 1.0);
    double expected = 1.0 + 2.0 / std::expm1(2.0 * kPi);
    CHECK(transformed_sum(pair) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(direct_sum(pair) == doctest::Approx(expected).epsilon(1e-11));
    CHECK(expected == doctest::Approx(1.003741873197321).epsilon(1e-14));
}

TEST_CASE("squared-cauchy lattice sums") {
    auto pair = FourierPair::sq_cauchy_two_thirds(0.0, 1.0);
    // 1 + 2 sum (1 + 2 pi x) e^{-2 pi x}, closed geometric forms
    double r = std::exp(-2.0 * kPi);
    double geo = r / (1.0 - r);
    double jgeo = r / ((1.0 - r) * (1.0 - r));
    double expected = 1.0 + 2.0 * (geo + 2.0 * kPi * jgeo);
    CHECK(expected == doctest::Approx(1.02729674326296).epsilon(1e-13));
    CHECK(transformed_sum(pair) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(direct_sum(pair) == doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("poisson identity over the parameter grid") {
    for (double mu : {0.0, 0.25, 0.77, 2.3}) {
        for (double sigma : {0.3, 0.5, 1.0, 2.0, 5.0}) {
            for (auto pair : {FourierPair::gauss(mu, sigma),
                              FourierPair::two_sided_exponential(sigma),
                              FourierPair::cauchy_half(mu, sigma),
                              FourierPair::sq_cauchy_two_thirds(mu, sigma)}) {
                CAPTURE(pair.label());
                auto r = lattice_sum(pair);
                CHECK(r.discrepancy <= 1e-10);
            }
        }
    }
}

TEST_CASE("shift periodicity in mu") {
    for (double mu : {0.13, 0.5, 0.99}) {
        for (double sigma : {0.4, 1.1}) {
            CHECK(std::abs(transformed_sum(FourierPair::gauss(mu, sigma)) -
                           transformed_sum(FourierPair::gauss(mu + 1.0, sigma))) <= 1e-14);
            CHECK(std::abs(direct_sum(FourierPair::cauchy_half(mu, sigma)) -
                           direct_sum(FourierPair::cauchy_half(mu + 1.0, sigma))) <= 1e-13);
        }
    }
}

TEST_CASE("geometric tail bound dominates the gaussian frequency tail") {
    for (double sigma : {0.25, 0.3, 0.5, 1.0, 2.0}) {
        double true_tail = 0.0;
        for (int k = 1; k < 200; ++k) {
            double z = kPi * sigma * k;
            true_tail += std::exp(-2.0 * z * z);
        }
        double bound = 1.0 / std::expm1(2.0 * kPi * kPi * sigma * sigma);
        CHECK(true_tail <= bound);
    }
}

TEST_CASE("zprime") {
    // gaussian side selection agrees across the crossover
    for (double sigma : {0.2, 0.39, 0.41, 1.0}) {
        double direct = direct_sum(FourierPair::gauss(0.3, sigma));
        CHECK(zprime(ZPrimeKind::gaussian, 0.3, sigma) ==
              doctest::Approx(direct).epsilon(1e-12));
    }

    // exponential: (1/mu) sum over N only, geometric closed form; always
    // exceeds 1 + 1/(2 mu)
    for (double mu : {0.5, 2.0, 5.0}) {
        double z = zprime(ZPrimeKind::exponential, 0.0, mu);
        CHECK(z == doctest::Approx(1.0 / (mu * -std::expm1(-1.0 / mu))).epsilon(1e-14));
        CHECK(z > 1.0 + 1.0 / (2.0 * mu));
    }
    CHECK(zprime(ZPrimeKind::exponential, 0.0, 5.0) > 1.1);

    // poisson route for the exponential kind: 1 + 1/(2 mu) + 2 sum 1/(1+(2 pi mu x)^2)
    for (double mu : {0.8, 3.0}) {
        double direct = zprime(ZPrimeKind::exponential, 0.0, mu);
        double sym = transformed_sum(FourierPair::two_sided_exponential(mu));
        CHECK(direct == doctest::Approx(sym + 0.5 / mu).epsilon(1e-11));
    }

    CHECK(zprime(ZPrimeKind::half_escort, 0.0, 1.0) ==
          doctest::Approx(1.003741873197321).epsilon(1e-12));
    CHECK(zprime(ZPrimeKind::two_thirds_escort, 0.0, 1.0) ==
          doctest::Approx(1.02729674326296).epsilon(1e-12));

    // Theorem-style bounding step: Z' - 1 <= 2/(e^{2 pi^2 sigma^2} - 1)
    for (double sigma : {1.0, 2.0}) {
        for (double mu : {0.0, 0.4}) {
            double z = zprime(ZPrimeKind::gaussian, mu, sigma);
            CHECK(z - 1.0 <= 2.0 / std::expm1(2.0 * kPi * kPi * sigma * sigma) + 1e-15);
        }
    }
}

TEST_CASE("tolerance validation") {
    CHECK_THROWS_AS(direct_sum(FourierPair::gauss(0.0, 1.0), 1e-15), ParameterError);
    CHECK_THROWS_AS(FourierPair::gauss(0.0, -1.0), ParameterError);
}
