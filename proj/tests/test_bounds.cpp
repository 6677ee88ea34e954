#include <doctest.h>

#include <cmath>

#include "massent/bounds.hpp"
#include "massent/errors.hpp"
#include "massent/numeric.hpp"
#include "massent/poisson_sum.hpp"

using namespace massent;

TEST_CASE("massey variance bound") {
    auto r = massey_variance(0.25, EntropyOrder::shannon());
    CHECK(r.bound_bits == doctest::Approx(1.254614334820063).epsilon(1e-13));
    CHECK(r.strict);

    // exceeds the fair-coin entropy
    auto b = build(FamilySpec::bernoulli(0.5));
    r.against(discrete_entropy(b, EntropyOrder::shannon()));
    CHECK(*r.holds);
    CHECK(*r.gap_bits == doctest::Approx(0.254614334820063).epsilon(1e-10));

    // renyi closed forms: 1/2 -> (1/2) log2(4 pi^2 (s2 + 1/12)),
    // 2 -> (1/2) log2((125/9)(s2 + 1/12))
    for (double s2 : {0.25, 1.0, 3.0}) {
        CHECK(massey_variance(s2, EntropyOrder::renyi(0.5)).bound_bits ==
              doctest::Approx(0.5 * std::log2(4.0 * kPi * kPi * (s2 + 1.0 / 12.0)))
                  .epsilon(1e-13));
        CHECK(massey_variance(s2, EntropyOrder::renyi(2.0)).bound_bits ==
              doctest::Approx(0.5 * std::log2(125.0 / 9.0 * (s2 + 1.0 / 12.0)))
                  .epsilon(1e-13));
    }

    CHECK_THROWS_AS(massey_variance(1.0, EntropyOrder::renyi(0.3)), ValidityError);
    CHECK_THROWS_AS(massey_variance(-1.0, EntropyOrder::shannon()), ParameterError);
}

TEST_CASE("mean bound") {
    CHECK(mean_bound(1.0, EntropyOrder::shannon()).bound_bits ==
          doctest::Approx(2.027657541610120).epsilon(1e-13));
    // geometric(1) entropy as a subject
    auto g = build(FamilySpec::geometric(1.0));
    auto r = mean_bound(1.0, EntropyOrder::shannon()).against(
        discrete_entropy(g, EntropyOrder::shannon()));
    CHECK(*r.subject_bits == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(*r.holds);

    for (double mu : {0.5, 1.0, 4.0}) {
        CHECK(mean_bound(mu, EntropyOrder::renyi(2.0 / 3.0)).bound_bits ==
              doctest::Approx(std::log2(4.0 * mu + 2.0)).epsilon(1e-13));
        CHECK(mean_bound(mu, EntropyOrder::renyi(2.0)).bound_bits ==
              doctest::Approx(std::log2(9.0 * (mu + 0.5) / 4.0)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(mean_bound(1.0, EntropyOrder::renyi(0.5)), ValidityError);
}

TEST_CASE("support bound") {
    CHECK(support_bound(0).bound_bits == 0.0);
    CHECK(support_bound(255).bound_bits == 8.0);
    CHECK_FALSE(support_bound(3).strict);

    // equiprobable achiever: gap exactly zero
    auto u = build(FamilySpec::uniform(6));
    for (auto order : {EntropyOrder::shannon(), EntropyOrder::renyi(0.5),
                       EntropyOrder::renyi(2.0)}) {
        auto r = support_bound(u.support_length()).against(discrete_entropy(u, order));
        CHECK(*r.gap_bits == 0.0);
        CHECK(*r.holds);
    }
}

TEST_CASE("improved variance bound") {
    auto r = improved_variance(1.0, EntropyOrder::shannon());
    CHECK(r.bound_bits == doctest::Approx(2.047095592899891).epsilon(1e-13));
    CHECK(r.bound_bits - 2.047095585180641 == doctest::Approx(7.719e-9).epsilon(1e-3));

    // improved beats massey for sigma^2 >= 0.5
    for (double s2 : {0.5, 1.0, 2.0, 5.0, 20.0}) {
        CHECK(improved_variance(s2, EntropyOrder::shannon()).bound_bits <
              massey_variance(s2, EntropyOrder::shannon()).bound_bits);
        CHECK(improved_variance(s2, EntropyOrder::renyi(0.5)).bound_bits <
              massey_variance(s2, EntropyOrder::renyi(0.5)).bound_bits);
    }

    // approaches the pure gaussian bound from above; at s2 = 4 the correction
    // (~1e-34) is far below one ulp of the leading term
    double gap = improved_variance(4.0, EntropyOrder::shannon()).bound_bits -
                 0.5 * std::log2(2.0 * kPi * kE * 4.0);
    CHECK(gap >= 0.0);
    CHECK(gap < 1e-12);
    double gap1 = improved_variance(1.0, EntropyOrder::shannon()).bound_bits -
                  0.5 * std::log2(2.0 * kPi * kE);
    CHECK(gap1 > 0.0);

    CHECK(improved_variance(2.25, EntropyOrder::renyi(0.5)).bound_bits ==
          doctest::Approx(std::log2(2.0 * kPi * 1.5) + 2.0 * kLog2E / std::expm1(3.0 * kPi))
              .epsilon(1e-13));
    CHECK_THROWS_AS(improved_variance(1.0, EntropyOrder::renyi(3.0)),
                    UnsupportedVariantError);
}

TEST_CASE("c_k constants") {
    CHECK(c_k(0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(c_k(1) == doctest::Approx(8.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-14));
    CHECK(c_k(2) == doctest::Approx(648.0 * std::sqrt(5.0) / 1000.0).epsilon(1e-14));
    // k = 0, 1 match the printed improved-bound coefficients (2 pi sigma and
    // 8 pi sigma / (3 sqrt 3))
    CHECK(c_k(0) * kPi == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    CHECK(c_k(1) * kPi == doctest::Approx(8.0 * kPi / (3.0 * std::sqrt(3.0))).epsilon(1e-14));
    CHECK_THROWS_AS(c_k(-1), ParameterError);
}

TEST_CASE("mixed variance bound: moustache two-point case") {
    for (double p : {0.11, 0.3, 0.5, 0.72, 0.9}) {
        double q = 1.0 - p;
        auto r = mixed_variance(SupportSpec::explicit_set({0, 1}), p, p * q,
                                EntropyOrder::shannon());
        double moustache =
            std::log2(std::exp((0.5 - p) / q) + std::exp((p - 0.5) / p));
        CHECK(r.bound_bits == doctest::Approx(moustache).epsilon(1e-12));
        r.against(binary_entropy(p));
        CHECK(*r.holds);
    }

    // equality at the fair coin, to 1e-14
    auto eq = mixed_variance(SupportSpec::explicit_set({0, 1}), 0.5, 0.25,
                             EntropyOrder::shannon());
    CHECK(std::abs(eq.bound_bits - 1.0) <= 1e-14);
    CHECK_FALSE(eq.strict);
}

TEST_CASE("mixed variance over the full lattice") {
    // shannon: (1/2) log2 e + log2(sqrt(2 pi) Z'_gauss)
    auto r = mixed_variance(SupportSpec::integers(), 0.0, 1.0, EntropyOrder::shannon());
    double expected = 0.5 * kLog2E +
                      std::log2(std::sqrt(2.0 * kPi) * (1.0 + 2.0 * std::exp(-2.0 * kPi * kPi)));
    CHECK(r.bound_bits == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.bound_bits == doctest::Approx(2.047095592899888).epsilon(1e-10));

    // translation invariance: mu and mu + 1 agree exactly
    for (double mu : {0.2, 0.5, 0.9}) {
        for (auto order : {EntropyOrder::shannon(), EntropyOrder::renyi(0.5),
                           EntropyOrder::renyi(2.0)}) {
            double a = mixed_variance(SupportSpec::integers(), mu, 1.3, order).bound_bits;
            double b = mixed_variance(SupportSpec::integers(), mu + 1.0, 1.3, order).bound_bits;
            CHECK(std::abs(a - b) <= 1e-12);
        }
    }

    // alpha = 1/2 escort sum equals pi sigma Z'_{1/2} (cauchy lattice sum)
    for (double sigma : {0.8, 1.7}) {
        double lattice = kPi * sigma * zprime(ZPrimeKind::half_escort, 0.3, sigma);
        double expect = 1.0 + std::log2(lattice);  // (a/(1-a)) log2(2a/(3a-1)) = 1 at a=1/2
        CHECK(mixed_variance(SupportSpec::integers(), 0.3, sigma * sigma,
                             EntropyOrder::renyi(0.5))
                  .bound_bits == doctest::Approx(expect).epsilon(1e-11));
    }

    // alpha > 1: truncated window, compare against a long explicit support
    auto win = mixed_variance(SupportSpec::integers(), 0.4, 2.0, EntropyOrder::renyi(2.0));
    std::vector<long long> wide;
    for (long long x = -400; x <= 400; ++x) wide.push_back(x);
    auto full = mixed_variance(SupportSpec::explicit_set(wide), 0.4, 2.0,
                               EntropyOrder::renyi(2.0));
    CHECK(win.bound_bits == doctest::Approx(full.bound_bits).epsilon(1e-13));

    // alpha < 1 euler-maclaurin path against a brute-force partial sum
    // (kernel decays like u^-3, so +-1e7 terms leave a ~1e-14 tail)
    double a = 0.6;
    double b = (1.0 - a) / (3.0 * a - 1.0);
    double s = a / (1.0 - a);
    CompensatedSum brute;
    for (long long x = -10000000; x <= 10000000; ++x) {
        double u = (static_cast<double>(x) - 0.3) / 1.1;
        brute += std::pow(1.0 + b * u * u, -s);
    }
    auto em = mixed_variance(SupportSpec::integers(), 0.3, 1.1 * 1.1, EntropyOrder::renyi(a));
    double prefactor = a / (1.0 - a) * std::log2(2.0 * a / (3.0 * a - 1.0));
    double em_lattice = std::exp2(em.bound_bits - prefactor);
    CHECK(em_lattice == doctest::Approx(brute.value()).epsilon(1e-12));

    // near-critical orders (decay barely above 1/x): values frozen from a
    // 40-digit window-plus-incomplete-beta computation at mu=0.3, sigma=1.1
    auto lattice_at = [](double alpha) {
        double pf = alpha / (1.0 - alpha) * std::log2(2.0 * alpha / (3.0 * alpha - 1.0));
        return std::exp2(
            mixed_variance(SupportSpec::integers(), 0.3, 1.21, EntropyOrder::renyi(alpha))
                .bound_bits -
            pf);
    };
    CHECK(lattice_at(0.34) == doctest::Approx(12.791651271257342).epsilon(1e-11));
    CHECK(lattice_at(0.36) == doctest::Approx(6.703721765482009).epsilon(1e-11));
    CHECK(lattice_at(0.40) == doctest::Approx(4.6136556610393244).epsilon(1e-12));
}

TEST_CASE("mixed mean bound") {
    auto r = mixed_mean(1.0, EntropyOrder::shannon());
    CHECK(r.bound_bits == doctest::Approx(2.104423398517931).epsilon(1e-13));

    // weaker than the massey-type mean bound for all mu
    for (double mu : {0.1, 0.5, 1.0, 3.0, 10.0, 100.0})
        CHECK(mixed_mean(mu, EntropyOrder::shannon()).bound_bits >
              mean_bound(mu, EntropyOrder::shannon()).bound_bits);

    // renyi, alpha > 1: finite window equals brute force over a long support
    std::vector<long long> wide;
    for (long long x = 0; x <= 4000; ++x) wide.push_back(x);
    for (double a : {2.0, 3.0}) {
        double em = mixed_mean(2.5, EntropyOrder::renyi(a)).bound_bits;
        double brute = mixed_mean(2.5, EntropyOrder::renyi(a), SupportSpec::explicit_set(wide))
                           .bound_bits;
        CHECK(em == doctest::Approx(brute).epsilon(1e-12));
    }

    // renyi escort sum exceeds mu + 1/2 (trapezoid gap)
    for (double a : {0.6, 0.75, 2.0, 4.0}) {
        for (double mu : {0.5, 1.0, 5.0}) {
            double prefactor = a / (1.0 - a) * std::log2(a / (2.0 * a - 1.0));
            double lattice = std::exp2(mixed_mean(mu, EntropyOrder::renyi(a)).bound_bits -
                                       prefactor);
            CHECK(lattice > mu + 0.5);
        }
    }
    CHECK_THROWS_AS(mixed_mean(1.0, EntropyOrder::renyi(0.4)), ValidityError);
}

TEST_CASE("gaussian condition") {
    // poisson(4): mu/sigma^2 = 1 < 2 pi, sufficient condition holds
    auto poi = build(FamilySpec::poisson(4.0));
    auto r = gaussian_condition(poi.mean(), poi.variance());
    bool sufficient = r.validity[0].satisfied && r.validity[1].satisfied;
    CHECK(sufficient);
    r.against(discrete_entropy(poi, EntropyOrder::shannon()));
    CHECK(r.holds.has_value());
    CHECK(*r.holds);

    // binomial(16, 1/2): H < (1/2) log2(2 pi e npq)
    auto bin = build(FamilySpec::binomial(16, 0.5));
    auto rb = gaussian_condition(bin.mean(), bin.variance());
    rb.against(discrete_entropy(bin, EntropyOrder::shannon()));
    CHECK(rb.bound_bits == doctest::Approx(0.5 * std::log2(2.0 * kPi * kE * 4.0)).epsilon(1e-13));
    CHECK(*rb.gap_bits > 0.0);

    // small variance: sufficient condition fails, holds stays absent
    auto rs = gaussian_condition(0.0, 0.05);
    CHECK_FALSE(rs.validity[0].satisfied);
    rs.against(0.1);
    CHECK_FALSE(rs.holds.has_value());
}
