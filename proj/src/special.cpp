#include "massent/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "massent/errors.hpp"
#include "massent/numeric.hpp"

namespace massent {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set).
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,    676.5203681218851,      -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6,  1.5056327351493116e-7,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(sqrt(2 pi))

double lanczos_log_gamma(double x) {
    // Valid for x >= 0.5; callers shift smaller arguments up by the
    // recurrence Gamma(x) = Gamma(x + 1) / x.
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
    double t = x + 6.5;
    return kHalfLog2Pi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw ParameterError("log_gamma requires x > 0");
    if (x >= 0.5) return lanczos_log_gamma(x);
    return lanczos_log_gamma(x + 1.0) - std::log(x);
}

double log_gamma_ratio(double a, double b) { return log_gamma(a) - log_gamma(b); }

double log_factorial(long long k) {
    if (k < 0) throw ParameterError("log_factorial requires k >= 0");
    static const std::vector<double> table = [] {
        std::vector<double> t(4097);
        for (size_t i = 0; i < t.size(); ++i)
            t[i] = log_gamma(static_cast<double>(i) + 1.0);
        return t;
    }();
    if (static_cast<size_t>(k) < table.size()) return table[static_cast<size_t>(k)];
    return log_gamma(static_cast<double>(k) + 1.0);
}

double log_binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) throw ParameterError("log_binomial requires 0 <= k <= n");
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double agm(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw ParameterError("agm requires positive arguments");
    while (std::abs(a - b) > 4.0 * std::numeric_limits<double>::epsilon() * a) {
        double am = 0.5 * (a + b);
        double gm = std::sqrt(a * b);
        a = am;
        b = gm;
    }
    return 0.5 * (a + b);
}

double gauss_constant() {
    static const double g = 1.0 / agm(1.0, std::sqrt(2.0));
    return g;
}

}  // namespace massent
