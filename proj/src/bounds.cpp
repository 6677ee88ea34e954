#include "massent/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "massent/errors.hpp"
#include "massent/maxent.hpp"
#include "massent/numeric.hpp"
#include "massent/poisson_sum.hpp"

namespace massent {

BoundReport& BoundReport::against(double subject) {
    subject_bits = subject;
    gap_bits = bound_bits - subject;
    bool all_valid = std::all_of(validity.begin(), validity.end(),
                                 [](const ValidityCheck& v) { return v.satisfied; });
    if (all_valid)
        holds = strict ? (subject < bound_bits) : (subject <= bound_bits);
    else
        holds.reset();
    return *this;
}

SupportSpec SupportSpec::naturals_up_to(long long n) {
    SupportSpec s;
    s.all_integers = false;
    s.points.reserve(static_cast<std::size_t>(n) + 1);
    for (long long k = 0; k <= n; ++k) s.points.push_back(k);
    return s;
}

SupportSpec SupportSpec::explicit_set(std::vector<long long> pts) {
    SupportSpec s;
    s.all_integers = false;
    s.points = std::move(pts);
    return s;
}

SupportSpec SupportSpec::of(const DiscretePmf& pmf) {
    return explicit_set({pmf.support().begin(), pmf.support().end()});
}

namespace {

std::string order_suffix(EntropyOrder order) {
    if (order.is_shannon()) return "";
    std::ostringstream os;
    os << ", alpha=" << order.alpha();
    return os.str();
}

// int_U^inf (1 + b u^2)^(-s) du for s > 1/2. Substituting w = 1/(1 + b u^2)
// turns it into (1/(2 sqrt b)) B_w(s - 1/2, 1/2), evaluated by the binomial
// series of (1 - t)^(-1/2); w is small once U covers a few kernel widths.
// Near-critical exponents (s slightly above 1/2) defeat quadrature: at
// machine resolution the mapped tail still carries a visible fraction of
// the mass, while this series is exact.
double power_kernel_tail_integral(double b, double s, double U) {
    const double w = 1.0 / (1.0 + b * U * U);
    const double a = s - 0.5;
    double coeff = 1.0;
    double wk = std::pow(w, a);
    CompensatedSum sum;
    for (int k = 0; k < 100000; ++k) {
        double term = coeff * wk / (a + static_cast<double>(k));
        sum += term;
        if (term <= 1e-18 * sum.value()) return sum.value() / (2.0 * std::sqrt(b));
        coeff *= (static_cast<double>(k) + 0.5) / (static_cast<double>(k) + 1.0);
        wk *= w;
    }
    throw AccuracyError("power-kernel tail series did not converge");
}

// Escort lattice sum over all integers for the variance-type kernel
// (1 + b ((x-mu)/sigma)^2)^(-s) with s = alpha/(1-alpha), alpha < 1.
// Direct window plus Euler-Maclaurin tails.
struct EscortVarianceKernel {
    double mu, sigma, b, s;

    double value(double x) const {
        double u = (x - mu) / sigma;
        return std::pow(1.0 + b * u * u, -s);
    }
    double d1(double x) const {
        double u = (x - mu) / sigma;
        double w = 1.0 + b * u * u;
        return -2.0 * b * s * u * std::pow(w, -s - 1.0) / sigma;
    }
    double d3(double x) const {
        double u = (x - mu) / sigma;
        double w = 1.0 + b * u * u;
        double g = 12.0 * b * b * s * (s + 1.0) * u * std::pow(w, -s - 2.0) -
                   8.0 * b * b * b * s * (s + 1.0) * (s + 2.0) * u * u * u * std::pow(w, -s - 3.0);
        return g / (sigma * sigma * sigma);
    }
    double tail_integral(double n) const {
        return sigma * power_kernel_tail_integral(b, s, (n - mu) / sigma);
    }
    double em_tail_from(double n) const {
        return tail_integral(n) + 0.5 * value(n) - d1(n) / 12.0 + d3(n) / 720.0;
    }
};

double escort_variance_sum_all_integers(double mu, double sigma, double alpha) {
    const double b = (1.0 - alpha) / (3.0 * alpha - 1.0);
    if (alpha > 1.0) {
        // compact kernel: only |x - mu| < sigma sqrt((3a-1)/(a-1)) contributes
        double half_width = sigma * std::sqrt((3.0 * alpha - 1.0) / (alpha - 1.0));
        long long lo = static_cast<long long>(std::ceil(mu - half_width));
        long long hi = static_cast<long long>(std::floor(mu + half_width));
        const double s = alpha / (alpha - 1.0);
        CompensatedSum acc;
        for (long long x = lo; x <= hi; ++x) {
            double u = (static_cast<double>(x) - mu) / sigma;
            double w = 1.0 + b * u * u;
            if (w > 0.0) acc += std::pow(w, s);
        }
        return acc.value();
    }

    EscortVarianceKernel k{mu, sigma, b, alpha / (1.0 - alpha)};
    double width = std::max(60.0 * sigma, 60.0);
    while (std::abs(k.d3(mu + width)) / 720.0 > 1e-15) {
        width *= 2.0;
        if (width > 1e9) throw AccuracyError("escort lattice sum window exploded");
    }
    long long lo = static_cast<long long>(std::floor(mu - width));
    long long hi = static_cast<long long>(std::ceil(mu + width));
    CompensatedSum acc;
    for (long long x = lo; x <= hi; ++x) acc += k.value(static_cast<double>(x));
    acc += k.em_tail_from(static_cast<double>(hi + 1));
    EscortVarianceKernel mirror{-mu, sigma, b, k.s};
    acc += mirror.em_tail_from(static_cast<double>(-(lo - 1)));
    return acc.value();
}

// Mean-type escort kernel (1 + a x)^(-s) on the nonnegative axis, s > 1.
double escort_mean_sum_naturals(double mu, double alpha) {
    if (alpha > 1.0) {
        double a = (alpha - 1.0) / ((2.0 * alpha - 1.0) * mu);
        double s = alpha / (alpha - 1.0);
        long long hi = static_cast<long long>(std::floor(1.0 / a));
        CompensatedSum acc;
        for (long long x = 0; x <= hi; ++x) {
            double w = 1.0 - a * static_cast<double>(x);
            if (w > 0.0) acc += std::pow(w, s);
        }
        return acc.value();
    }

    const double a = (1.0 - alpha) / ((2.0 * alpha - 1.0) * mu);
    const double s = alpha / (1.0 - alpha);
    auto value = [&](double x) { return std::pow(1.0 + a * x, -s); };
    auto d1 = [&](double x) { return -a * s * std::pow(1.0 + a * x, -s - 1.0); };
    auto d3 = [&](double x) {
        return -a * a * a * s * (s + 1.0) * (s + 2.0) * std::pow(1.0 + a * x, -s - 3.0);
    };
    auto tail_integral = [&](double n) {
        return std::pow(1.0 + a * n, 1.0 - s) / (a * (s - 1.0));
    };

    double n = 60.0;
    while (std::abs(d3(n)) / 720.0 > 1e-15) {
        n *= 2.0;
        if (n > 1e12) throw AccuracyError("escort mean sum window exploded");
    }
    long long hi = static_cast<long long>(std::ceil(n));
    CompensatedSum acc;
    for (long long x = 0; x <= hi; ++x) acc += value(static_cast<double>(x));
    double start = static_cast<double>(hi + 1);
    acc += tail_integral(start) + 0.5 * value(start) - d1(start) / 12.0 + d3(start) / 720.0;
    return acc.value();
}

}  // namespace

BoundReport massey_variance(double sigma2, EntropyOrder order) {
    if (!(sigma2 > 0.0)) throw ParameterError("massey_variance requires sigma^2 > 0");
    if (!order.is_shannon() && !(order.alpha() > 1.0 / 3.0))
        throw ValidityError("variance bounds cannot exist for alpha <= 1/3", 1.0 / 3.0);

    BoundReport r;
    r.name = "massey_variance";
    r.strict = true;
    r.validity.push_back({"sigma^2 > 0", true});
    if (order.is_shannon()) {
        r.bound_bits = 0.5 * std::log2(2.0 * kPi * kE * (sigma2 + 1.0 / 12.0));
        r.formula = "(1/2) log2(2 pi e (sigma^2 + 1/12))";
    } else {
        r.validity.push_back({"alpha > 1/3", true});
        r.bound_bits = maxent_bound(Constraint::variance(sigma2 + 1.0 / 12.0), order);
        r.formula = "variance maxent bound at sigma^2 + 1/12" + order_suffix(order);
    }
    return r;
}

BoundReport mean_bound(double mu, EntropyOrder order) {
    if (!(mu > 0.0)) throw ParameterError("mean_bound requires mu > 0");
    if (!order.is_shannon() && !(order.alpha() > 0.5))
        throw ValidityError("mean bounds cannot exist for alpha <= 1/2", 0.5);

    BoundReport r;
    r.name = "mean_bound";
    r.strict = true;
    r.validity.push_back({"mu > 0", true});
    if (order.is_shannon()) {
        r.bound_bits = std::log2(kE * (mu + 0.5));
        r.formula = "log2(e (mu + 1/2))";
    } else {
        r.validity.push_back({"alpha > 1/2", true});
        r.bound_bits = maxent_bound(Constraint::mean(mu + 0.5), order);
        r.formula = "log2(mu + 1/2) + (a/(1-a)) log2(a/(2a-1))" + order_suffix(order);
    }
    return r;
}

BoundReport support_bound(long long support_length) {
    if (support_length < 0) throw ParameterError("support length must be >= 0");
    BoundReport r;
    r.name = "support_bound";
    r.formula = "log2(l + 1)";
    r.bound_bits = std::log2(static_cast<double>(support_length) + 1.0);
    r.strict = false;  // achieved by equiprobable laws
    r.validity.push_back({"l >= 0", true});
    return r;
}

BoundReport improved_variance(double sigma2, EntropyOrder order) {
    if (!(sigma2 > 0.0)) throw ParameterError("improved_variance requires sigma^2 > 0");
    const double sigma = std::sqrt(sigma2);

    BoundReport r;
    r.name = "improved_variance";
    r.strict = true;
    r.validity.push_back({"sigma^2 > 0", true});
    if (order.is_shannon()) {
        r.bound_bits = 0.5 * std::log2(2.0 * kPi * kE * sigma2) +
                       2.0 * kLog2E / std::expm1(2.0 * kPi * kPi * sigma2);
        r.formula = "(1/2) log2(2 pi e sigma^2) + 2 log2(e)/(e^(2 pi^2 sigma^2) - 1)";
        return r;
    }
    double alpha = order.alpha();
    if (std::abs(alpha - 0.5) < 1e-12) {
        r.bound_bits =
            std::log2(2.0 * kPi * sigma) + 2.0 * kLog2E / std::expm1(2.0 * kPi * sigma);
        r.formula = "log2(2 pi sigma) + 2 log2(e)/(e^(2 pi sigma) - 1)";
        return r;
    }
    if (std::abs(alpha - 2.0 / 3.0) < 1e-12) {
        r.bound_bits = std::log2(8.0 * kPi * sigma / (3.0 * std::sqrt(3.0))) +
                       4.0 * (1.0 + kPi * sigma) * kLog2E / std::expm1(2.0 * kPi * sigma);
        r.formula = "log2(8 pi sigma/(3 sqrt 3)) + 4 (1 + pi sigma) log2(e)/(e^(2 pi sigma) - 1)";
        return r;
    }
    throw UnsupportedVariantError(
        "improved_variance exists only for shannon, alpha = 1/2 and alpha = 2/3");
}

double c_k(int k) {
    if (k < 0) throw ParameterError("c_k requires k >= 0");
    double binom = 1.0;
    for (int i = 1; i <= k; ++i) binom *= static_cast<double>(k + i) / static_cast<double>(i);
    double base = (static_cast<double>(k) + 1.0) / (2.0 * (2.0 * k + 1.0));
    return 4.0 * std::sqrt(2.0 * k + 1.0) * binom * std::pow(base, k + 1);
}

BoundReport mixed_variance(const SupportSpec& support, double mu, double sigma2,
                           EntropyOrder order) {
    if (!(sigma2 > 0.0)) throw ParameterError("mixed_variance requires sigma^2 > 0");
    if (!order.is_shannon() && !(order.alpha() > 1.0 / 3.0))
        throw ValidityError("variance bounds cannot exist for alpha <= 1/3", 1.0 / 3.0);
    const double sigma = std::sqrt(sigma2);

    BoundReport r;
    r.name = "mixed_variance";
    r.strict = false;
    r.validity.push_back({"sigma^2 > 0", true});

    if (order.is_shannon()) {
        double lattice;
        if (support.all_integers) {
            lattice = std::sqrt(2.0 * kPi * sigma2) * zprime(ZPrimeKind::gaussian, mu, sigma);
        } else {
            CompensatedSum acc;
            for (long long x : support.points) {
                double u = (static_cast<double>(x) - mu) / sigma;
                acc += std::exp(-0.5 * u * u);
            }
            lattice = acc.value();
        }
        r.bound_bits = 0.5 * kLog2E + std::log2(lattice);
        r.formula = "(1/2) log2(e) + log2(sum_x e^(-((x-mu)/sigma)^2 / 2))";
        return r;
    }

    const double alpha = order.alpha();
    r.validity.push_back({"alpha > 1/3", true});
    double lattice;
    if (support.all_integers) {
        lattice = escort_variance_sum_all_integers(mu, sigma, alpha);
    } else {
        const double b = (1.0 - alpha) / (3.0 * alpha - 1.0);
        const double expo = alpha / (alpha - 1.0);
        CompensatedSum acc;
        for (long long x : support.points) {
            double u = (static_cast<double>(x) - mu) / sigma;
            double w = 1.0 + b * u * u;
            if (w > 0.0) acc += std::pow(w, expo);
        }
        lattice = acc.value();
    }
    r.bound_bits =
        alpha / (1.0 - alpha) * std::log2(2.0 * alpha / (3.0 * alpha - 1.0)) + std::log2(lattice);
    r.formula = "(a/(1-a)) log2(2a/(3a-1)) + log2(escort sum)" + order_suffix(order);
    return r;
}

BoundReport mixed_mean(double mu, EntropyOrder order, const SupportSpec& support) {
    if (!(mu > 0.0)) throw ParameterError("mixed_mean requires mu > 0");
    if (!order.is_shannon() && !(order.alpha() > 0.5))
        throw ValidityError("mean bounds cannot exist for alpha <= 1/2", 0.5);

    BoundReport r;
    r.name = "mixed_mean";
    r.strict = false;
    r.validity.push_back({"mu > 0", true});

    if (order.is_shannon()) {
        if (support.all_integers) {
            r.bound_bits = kLog2E - std::log2(-std::expm1(-1.0 / mu));
            r.formula = "log2(e) - log2(1 - e^(-1/mu))";
        } else {
            CompensatedSum acc;
            for (long long x : support.points)
                if (x >= 0) acc += std::exp(-static_cast<double>(x) / mu);
            r.bound_bits = kLog2E + std::log2(acc.value());
            r.formula = "log2(e) + log2(sum_x e^(-x/mu))";
        }
        return r;
    }

    const double alpha = order.alpha();
    r.validity.push_back({"alpha > 1/2", true});
    double lattice;
    if (support.all_integers) {
        lattice = escort_mean_sum_naturals(mu, alpha);
    } else {
        const double b = (1.0 - alpha) / (2.0 * alpha - 1.0);
        const double expo = alpha / (alpha - 1.0);
        CompensatedSum acc;
        for (long long x : support.points) {
            if (x < 0) continue;
            double w = 1.0 + b * static_cast<double>(x) / mu;
            if (w > 0.0) acc += std::pow(w, expo);
        }
        lattice = acc.value();
    }
    r.bound_bits =
        alpha / (1.0 - alpha) * std::log2(alpha / (2.0 * alpha - 1.0)) + std::log2(lattice);
    r.formula = "(a/(1-a)) log2(a/(2a-1)) + log2(escort sum)" + order_suffix(order);
    return r;
}

BoundReport gaussian_condition(double mu, double sigma2) {
    if (!(sigma2 > 0.0)) throw ParameterError("gaussian_condition requires sigma^2 > 0");
    if (mu < 0.0) throw ParameterError("gaussian_condition applies to nonnegative laws");
    const double sigma = std::sqrt(sigma2);

    BoundReport r;
    r.name = "gaussian_condition";
    r.formula = "(1/2) log2(2 pi e sigma^2)";
    r.bound_bits = 0.5 * std::log2(2.0 * kPi * kE * sigma2);
    r.strict = true;

    bool c1 = 2.0 * kPi * sigma2 > 1.0;
    double lhs = 4.0 * kPi * kPi * sigma2;
    double rhs = ((mu + 1.0) / sigma) * ((mu + 1.0) / sigma) + std::log(8.0 * kPi * sigma2);
    bool c2 = lhs > rhs;
    r.validity.push_back({"2 pi sigma^2 > 1", c1});
    r.validity.push_back({"(2 pi sigma)^2 > ((mu+1)/sigma)^2 + ln(8 pi sigma^2)", c2});
    return r;
}

}  // namespace massent
