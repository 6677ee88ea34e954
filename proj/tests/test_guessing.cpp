#include <doctest.h>

#include <cmath>

#include "massent/entropy.hpp"
#include "massent/errors.hpp"
#include "massent/guessing.hpp"
#include "massent/numeric.hpp"
#include "massent/special.hpp"

using namespace massent;

TEST_CASE("guessing profile basics") {
    auto point = guessing_profile(build(FamilySpec::custom({{9, 1.0}})));
    CHECK(point.G == 1.0);
    CHECK(guessing_moment(point, 3.0) == 1.0);

    for (long long m : {1LL, 3LL, 256LL}) {
        auto u = guessing_profile(build(FamilySpec::uniform(m)));
        CHECK(u.G == doctest::Approx((static_cast<double>(m) + 1.0) / 2.0).epsilon(1e-13));
    }

    auto p = guessing_profile(build(FamilySpec::custom({{0, 0.5}, {1, 0.25}, {2, 0.25}})));
    CHECK(p.G == doctest::Approx(1.75).epsilon(1e-14));
    // ranked probabilities are nonincreasing
    for (std::size_t i = 1; i < p.rank_pmf.size(); ++i)
        CHECK(p.rank_pmf.probs()[i] <= p.rank_pmf.probs()[i - 1]);
}

TEST_CASE("guessing moments") {
    auto u3 = guessing_profile(build(FamilySpec::uniform(3)));
    CHECK(guessing_moment(u3, 2.0) == doctest::Approx(14.0 / 3.0).epsilon(1e-14));

    auto p = guessing_profile(
        build(FamilySpec::custom({{0, 0.4}, {1, 0.3}, {2, 0.2}, {3, 0.1}})));
    CHECK(std::abs(guessing_moment(p, 1.0) - p.G) <= 1e-14);
    CHECK_THROWS_AS(guessing_moment(p, 0.0), ParameterError);
}

TEST_CASE("rank-law invariance under relabeling") {
    auto a = build(FamilySpec::custom({{0, 0.5}, {1, 0.3}, {2, 0.2}}));
    auto b = build(FamilySpec::custom({{-7, 0.2}, {4, 0.5}, {90, 0.3}}));
    for (double rho : {1.0, 2.0, 3.5}) {
        CHECK(guessing_moment(guessing_profile(a), rho) ==
              doctest::Approx(guessing_moment(guessing_profile(b), rho)).epsilon(1e-15));
    }
}

TEST_CASE("conditional guessing") {
    auto joint = JointPmf::from_matrix({0, 1}, {0, 1}, {0.4, 0.1, 0.2, 0.3});
    CHECK(conditional_guessing(joint, 1.0) == doctest::Approx(1.3).epsilon(1e-14));

    // independence: conditional equals unconditional
    auto px = build(FamilySpec::custom({{0, 0.5}, {1, 0.3}, {2, 0.2}}));
    auto py = build(FamilySpec::custom({{0, 0.6}, {1, 0.4}}));
    auto prod = JointPmf::product(px, py);
    for (double rho : {1.0, 2.0})
        CHECK(conditional_guessing(prod, rho) ==
              doctest::Approx(guessing_moment(guessing_profile(px), rho)).epsilon(1e-12));

    // determinism: one guess suffices
    auto diag = JointPmf::from_matrix({0, 1}, {0, 1}, {0.5, 0.0, 0.0, 0.5});
    CHECK(conditional_guessing(diag, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("massey original lower bound") {
    CHECK(*lb_massey_original(2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(*lb_massey_original(8.0) == doctest::Approx(65.0).epsilon(1e-14));
    CHECK_FALSE(lb_massey_original(1.5).has_value());
}

TEST_CASE("improved lower bound") {
    CHECK(lb_improved(8.0) == doctest::Approx(256.0 / kE + 0.5).epsilon(1e-14));
    CHECK(lb_improved(8.0) == doctest::Approx(94.67713693988923).epsilon(1e-13));
    CHECK(lb_improved(0.0) == doctest::Approx(1.0 / kE + 0.5).epsilon(1e-15));
    CHECK(lb_improved(0.0) < 1.0);  // consistent with G(point mass) = 1

    // crossover with the original bound at log2(2e/(4-e))
    double cross = std::log2(2.0 * kE / (4.0 - kE));
    CHECK(cross == doctest::Approx(2.084615968650272).epsilon(1e-14));
    CHECK(lb_improved(cross) == doctest::Approx(*lb_massey_original(cross)).epsilon(1e-13));
    CHECK(lb_improved(cross + 0.1) > *lb_massey_original(cross + 0.1));
    CHECK(lb_improved(cross - 0.05) < *lb_massey_original(cross - 0.05));
}

TEST_CASE("renyi lower bound coefficients") {
    // (1 - (1-a)/a)^(a/(1-a)): 1/4, 8/27, 4/9 at a = 2/3, 3/4, 2
    CHECK(lb_renyi(0.0, 2.0 / 3.0) == doctest::Approx(0.25 + 0.5).epsilon(1e-13));
    CHECK(lb_renyi(0.0, 0.75) == doctest::Approx(8.0 / 27.0 + 0.5).epsilon(1e-13));
    CHECK(lb_renyi(0.0, 2.0) == doctest::Approx(4.0 / 9.0 + 0.5).epsilon(1e-13));
    for (double h : {1.0, 4.0, 8.0}) {
        CHECK(lb_renyi(h, 2.0) ==
              doctest::Approx(4.0 / 9.0 * std::exp2(h) + 0.5).epsilon(1e-13));
        CHECK(lb_renyi(h, 2.0 / 3.0) ==
              doctest::Approx(0.25 * std::exp2(h) + 0.5).epsilon(1e-13));
    }
    CHECK_THROWS_AS(lb_renyi(1.0, 0.5), ValidityError);
    CHECK_THROWS_AS(lb_renyi(1.0, 0.4), ValidityError);
}

TEST_CASE("arikan bounds") {
    auto u = build(FamilySpec::uniform(256));
    double h_half = discrete_entropy(u, EntropyOrder::renyi(0.5));
    CHECK(h_half == 8.0);
    double g = guessing_profile(u).G;
    CHECK(g == doctest::Approx(128.5));

    double improved = lb_arikan(h_half, 256, ArikanVariant::improved);
    CHECK(improved == doctest::Approx(256.0 / std::log(513.0)).epsilon(1e-14));
    CHECK(improved == doctest::Approx(41.02382752809133).epsilon(1e-12));
    CHECK(improved <= g);
    CHECK(lb_arikan(h_half, 256, ArikanVariant::original) <= g);

    // improved denominator beats the original for M > 1
    for (long long m : {2LL, 10LL, 1000LL, 1000000LL})
        CHECK(std::log(2.0 * m + 1.0) < 1.0 + std::log(static_cast<double>(m)));

    // M = 1: denominators 1 and ln 3, both bounds below G = 1 at H = 0
    CHECK(lb_arikan(0.0, 1, ArikanVariant::original) == doctest::Approx(1.0));
    CHECK(lb_arikan(0.0, 1, ArikanVariant::improved) ==
          doctest::Approx(1.0 / std::log(3.0)).epsilon(1e-14));
    CHECK(lb_arikan(0.0, 1, ArikanVariant::improved) < 1.0);
}

TEST_CASE("small-alpha bounds") {
    // a = 1/3: 2^(2H + 1) / (4 (2M+1)) = 2^(2H) / (2 (2M+1))
    for (double h : {0.0, 2.0, 5.0}) {
        for (long long m : {4LL, 100LL}) {
            CHECK(lb_small_alpha(h, 1.0 / 3.0, m) ==
                  doctest::Approx(std::exp2(2.0 * h) / (2.0 * (2.0 * m + 1.0)))
                      .epsilon(1e-13));
            CHECK(lb_small_alpha(h, 0.25, m) ==
                  doctest::Approx(32.0 / 27.0 * std::exp2(3.0 * h) /
                                  ((2.0 * m + 1.0) * (2.0 * m + 1.0)))
                      .epsilon(1e-13));
        }
    }
    // sweep: bound below G for uniform alphabets
    for (long long m : {2LL, 16LL, 1024LL, 10000LL}) {
        auto u = build(FamilySpec::uniform(m));
        double g = (static_cast<double>(m) + 1.0) / 2.0;
        for (double a : {1.0 / 3.0, 0.25}) {
            double h = discrete_entropy(u, EntropyOrder::renyi(a));
            CHECK(lb_small_alpha(h, a, m) <= g);
        }
    }
    CHECK_THROWS_AS(lb_small_alpha(1.0, 0.5, 4), ValidityError);
    CHECK_THROWS_AS(lb_small_alpha(1.0, 0.6, 4), ValidityError);
}

TEST_CASE("mid-alpha bound is weaker than the renyi bound") {
    for (double h : {0.0, 4.0, 8.0}) {
        CHECK(lb_mid_alpha(h, 2.0 / 3.0) < lb_renyi(h, 2.0 / 3.0));
        CHECK(lb_mid_alpha(h, 0.8) < lb_renyi(h, 0.8));
    }
    // factor degenerates to zero as alpha -> 1/2+
    CHECK(lb_mid_alpha(4.0, 0.500001) < 1e-3);

    auto u = build(FamilySpec::uniform(16));
    double h = discrete_entropy(u, EntropyOrder::renyi(0.75));
    CHECK(lb_mid_alpha(h, 0.75) <= 8.5);

    CHECK_THROWS_AS(lb_mid_alpha(1.0, 0.5), ValidityError);
    CHECK_THROWS_AS(lb_mid_alpha(1.0, 1.2), ValidityError);
}

TEST_CASE("moment lower bounds") {
    // rho = 2: 2 * 2^(2H) / (pi e)
    for (double h : {0.0, 3.0, 8.0})
        CHECK(lb_moment(h, 2.0) ==
              doctest::Approx(2.0 * std::exp2(2.0 * h) / (kPi * kE)).epsilon(1e-13));

    // rho = 1 reproduces the improved bound without the additive half
    CHECK(lb_moment(8.0, 1.0) == doctest::Approx(lb_improved(8.0) - 0.5).epsilon(1e-13));
    CHECK(lb_moment(8.0, 1.0) == doctest::Approx(94.17713693988923).epsilon(1e-13));

    // rho = 4 coefficient via Gauss's constant: 8 / (G^2 pi^3 e)
    double g = gauss_constant();
    for (double h : {0.0, 2.0})
        CHECK(lb_moment(h, 4.0) ==
              doctest::Approx(8.0 * std::exp2(4.0 * h) / (g * g * kPi * kPi * kPi * kE))
                  .epsilon(1e-12));
}

TEST_CASE("renyi moment lower bounds") {
    // rho = 2, alpha = 1/2: 2^(2H) / pi^2
    for (double h : {0.0, 5.0})
        CHECK(lb_moment_renyi(h, 0.5, 2.0) ==
              doctest::Approx(std::exp2(2.0 * h) / (kPi * kPi)).epsilon(1e-12));

    // rho = 3, alpha = 2: (512/2401) 2^(3H)
    CHECK(lb_moment_renyi(1.0, 2.0, 3.0) ==
          doctest::Approx(512.0 / 2401.0 * 8.0).epsilon(1e-12));
    // rho = 4, alpha = 2: (10000/59049) 2^(4H)
    CHECK(lb_moment_renyi(0.5, 2.0, 4.0) ==
          doctest::Approx(10000.0 / 59049.0 * 4.0).epsilon(1e-12));

    // other printed examples: G2 > (27/16) 2^(2 H_{2/3}) / pi^2,
    // G2 > (36/125) 2^(2 H_2), G2 > 3 * 2^(2 H_3) / pi^2,
    // G3 > (9/2) 2^(3 H_{1/2}) / (sqrt 3 pi^3)
    CHECK(lb_moment_renyi(0.0, 2.0 / 3.0, 2.0) ==
          doctest::Approx(27.0 / (16.0 * kPi * kPi)).epsilon(1e-12));
    CHECK(lb_moment_renyi(0.0, 2.0, 2.0) == doctest::Approx(36.0 / 125.0).epsilon(1e-12));
    CHECK(lb_moment_renyi(0.0, 3.0, 2.0) ==
          doctest::Approx(3.0 / (kPi * kPi)).epsilon(1e-12));
    CHECK(lb_moment_renyi(0.0, 0.5, 3.0) ==
          doctest::Approx(4.5 / (std::sqrt(3.0) * kPi * kPi * kPi)).epsilon(1e-12));

    // G4 examples with Gauss's constant: 2^(4 H_{1/3}) / (G^4 pi^4) and
    // (27/4) 2^(4 H_{1/2}) / pi^4 and (80/9) 2^(4 H_5) / (G^4 pi^4)
    double g = gauss_constant();
    double pi4 = kPi * kPi * kPi * kPi;
    CHECK(lb_moment_renyi(0.0, 1.0 / 3.0, 4.0) ==
          doctest::Approx(1.0 / (g * g * g * g * pi4)).epsilon(1e-11));
    CHECK(lb_moment_renyi(0.0, 0.5, 4.0) == doctest::Approx(6.75 / pi4).epsilon(1e-12));
    CHECK(lb_moment_renyi(0.0, 5.0, 4.0) ==
          doctest::Approx(80.0 / (9.0 * g * g * g * g * pi4)).epsilon(1e-11));

    try {
        lb_moment_renyi(1.0, 0.2, 3.0);
        FAIL("expected ValidityError");
    } catch (const ValidityError& e) {
        CHECK(e.threshold() == doctest::Approx(0.25));
    }
}

TEST_CASE("soundness on family pmfs") {
    std::vector<DiscretePmf> pmfs;
    pmfs.push_back(build(FamilySpec::bernoulli(0.3)));
    pmfs.push_back(build(FamilySpec::binomial(12, 0.4)));
    pmfs.push_back(build(FamilySpec::poisson(3.0)));
    pmfs.push_back(build(FamilySpec::geometric(2.0)));
    pmfs.push_back(build(FamilySpec::uniform(32)));

    for (const auto& pmf : pmfs) {
        auto profile = guessing_profile(pmf);
        double h = discrete_entropy(pmf, EntropyOrder::shannon());
        long long m = static_cast<long long>(pmf.size());
        CHECK(lb_improved(h) < profile.G);
        if (auto orig = lb_massey_original(h)) CHECK(*orig <= profile.G);
        for (double a : {0.6, 0.75, 2.0, 3.0})
            CHECK(lb_renyi(discrete_entropy(pmf, EntropyOrder::renyi(a)), a) < profile.G);
        for (double a : {0.25, 1.0 / 3.0})
            CHECK(lb_small_alpha(discrete_entropy(pmf, EntropyOrder::renyi(a)), a, m) <
                  profile.G);
        for (double rho : {1.0, 2.0, 3.0, 4.0}) {
            double grho = guessing_moment(profile, rho);
            CHECK(lb_moment(h, rho) < grho);
            for (double a : {0.5, 2.0}) {
                if (a <= 1.0 / (1.0 + rho)) continue;
                CHECK(lb_moment_renyi(discrete_entropy(pmf, EntropyOrder::renyi(a)), a, rho) <
                      grho);
            }
        }
    }
}

TEST_CASE("conditional consistency on a random-ish joint") {
    auto joint = JointPmf::from_matrix(
        {0, 1, 2, 3}, {0, 1, 2},
        {0.10, 0.02, 0.08, 0.05, 0.20, 0.03, 0.07, 0.11, 0.04, 0.13, 0.06, 0.11});
    double g = conditional_guessing(joint, 1.0);
    CHECK(lb_improved(conditional_entropy(joint, EntropyOrder::shannon())) < g);
    for (double a : {0.6, 2.0})
        CHECK(lb_renyi(conditional_entropy(joint, EntropyOrder::renyi(a)), a) < g);
    CHECK(lb_arikan(conditional_entropy(joint, EntropyOrder::renyi(0.5)), 4,
                    ArikanVariant::improved) < g);
    for (double rho : {2.0, 3.0}) {
        double grho = conditional_guessing(joint, rho);
        CHECK(lb_moment(conditional_entropy(joint, EntropyOrder::shannon()), rho) < grho);
        CHECK(lb_moment_renyi(conditional_entropy(joint, EntropyOrder::renyi(2.0)), 2.0, rho) <
              grho);
    }
}
