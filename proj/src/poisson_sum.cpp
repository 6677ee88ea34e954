#include "massent/poisson_sum.hpp"

#include <cmath>
#include <sstream>

#include "massent/errors.hpp"
#include "massent/numeric.hpp"

namespace massent {

FourierPair::FourierPair(Kind kind, double mu, double scale)
    : kind_(kind), mu_(mu), scale_(scale) {
    if (!(scale > 0.0)) throw ParameterError("fourier pair requires a positive scale");
}

FourierPair FourierPair::gauss(double mu, double sigma) {
    return FourierPair(Kind::gauss, mu, sigma);
}

FourierPair FourierPair::two_sided_exponential(double mu_scale) {
    return FourierPair(Kind::two_sided_exponential, 0.0, mu_scale);
}

FourierPair FourierPair::cauchy_half(double mu, double sigma) {
    return FourierPair(Kind::cauchy_half, mu, sigma);
}

FourierPair FourierPair::sq_cauchy_two_thirds(double mu, double sigma) {
    return FourierPair(Kind::sq_cauchy_two_thirds, mu, sigma);
}

double FourierPair::spatial(double x) const {
    switch (kind_) {
        case Kind::gauss: {
            double u = (x - mu_) / scale_;
            return std::exp(-0.5 * u * u) / std::sqrt(2.0 * kPi * scale_ * scale_);
        }
        case Kind::two_sided_exponential:
            return std::exp(-std::abs(x) / scale_) / (2.0 * scale_);
        case Kind::cauchy_half: {
            double u = (x - mu_) / scale_;
            return 1.0 / (kPi * scale_ * (1.0 + u * u));
        }
        case Kind::sq_cauchy_two_thirds: {
            double u = (x - mu_) / scale_;
            double w = 1.0 + u * u;
            return 2.0 / (kPi * scale_ * w * w);
        }
    }
    return 0.0;
}

double FourierPair::transform_radial(double t) const {
    double at = std::abs(t);
    switch (kind_) {
        case Kind::gauss: {
            double z = kPi * scale_ * at;
            return std::exp(-2.0 * z * z);
        }
        case Kind::two_sided_exponential: {
            double z = 2.0 * kPi * scale_ * at;
            return 1.0 / (1.0 + z * z);
        }
        case Kind::cauchy_half:
            return std::exp(-2.0 * kPi * scale_ * at);
        case Kind::sq_cauchy_two_thirds: {
            double z = 2.0 * kPi * scale_ * at;
            return (1.0 + z) * std::exp(-z);
        }
    }
    return 0.0;
}

std::string FourierPair::label() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::gauss: os << "gauss"; break;
        case Kind::two_sided_exponential: os << "two_sided_exponential"; break;
        case Kind::cauchy_half: os << "cauchy_half"; break;
        case Kind::sq_cauchy_two_thirds: os << "sq_cauchy_two_thirds"; break;
    }
    os << "(mu=" << mu_ << ",scale=" << scale_ << ")";
    return os.str();
}

namespace {

struct SumOutcome {
    double value = 0.0;
    long long terms = 0;
};

// Power-law kernels 1/(1+u^2)^s with s in {1, 2}, centered at mu with scale
// sigma and leading constant c. Everything the Euler-Maclaurin tail needs.
struct RationalKernel {
    double c, mu, sigma;
    int s;  // 1: Cauchy, 2: squared Cauchy

    double value(double x) const {
        double u = (x - mu) / sigma;
        double w = 1.0 + u * u;
        return s == 1 ? c / w : c / (w * w);
    }
    double d1(double x) const {
        double u = (x - mu) / sigma;
        double w = 1.0 + u * u;
        double g = s == 1 ? -2.0 * u / (w * w) : -4.0 * u / (w * w * w);
        return c * g / sigma;
    }
    double d3(double x) const {
        double u = (x - mu) / sigma;
        double w = 1.0 + u * u;
        double g;
        if (s == 1)
            g = 24.0 * u / (w * w * w) - 48.0 * u * u * u / (w * w * w * w);
        else
            g = 72.0 * u / (w * w * w * w) - 192.0 * u * u * u / (w * w * w * w * w);
        return c * g / (sigma * sigma * sigma);
    }
    // int_x^inf value
    double tail_integral(double x) const {
        double u = (x - mu) / sigma;
        if (s == 1) return c * sigma * (kPi / 2.0 - std::atan(u));
        return c * sigma * (kPi / 4.0 - 0.5 * (u / (1.0 + u * u) + std::atan(u)));
    }
    // sum_{x = n, n+1, ...} value(x) by Euler-Maclaurin
    double em_tail_from(double n) const {
        return tail_integral(n) + 0.5 * value(n) - d1(n) / 12.0 + d3(n) / 720.0;
    }
};

// Lattice sum of a symmetric slowly-decaying kernel: direct terms in a
// window around the center, Euler-Maclaurin corrections for both tails.
SumOutcome rational_lattice_sum(const RationalKernel& k, double tol, long long budget) {
    double width = std::max(60.0 * k.sigma, 60.0);
    for (;;) {
        double n_right = std::ceil(k.mu + width);
        if (std::abs(k.d3(n_right)) / 720.0 < tol * 1e-2) break;
        width *= 2.0;
        if (static_cast<long long>(2.0 * width) > budget)
            throw AccuracyError("lattice sum window exceeded the term budget");
    }
    long long lo = static_cast<long long>(std::floor(k.mu - width));
    long long hi = static_cast<long long>(std::ceil(k.mu + width));
    CompensatedSum acc;
    for (long long x = lo; x <= hi; ++x) acc += k.value(static_cast<double>(x));
    // tails start one lattice point beyond the window; the left tail is the
    // mirrored right tail of the symmetric kernel
    acc += k.em_tail_from(static_cast<double>(hi + 1));
    RationalKernel mirrored = k;
    mirrored.mu = -k.mu;
    acc += mirrored.em_tail_from(static_cast<double>(-(lo - 1)));
    return {acc.value(), hi - lo + 1};
}

// Outward expansion for log-concave kernels (gauss, two-sided exponential):
// the term ratio on each side is nonincreasing, so once it is below 1 the
// remaining tail is bounded by a geometric series.
SumOutcome log_concave_lattice_sum(const FourierPair& pair, double tol, long long budget) {
    long long center = llround(pair.mu());
    CompensatedSum acc;
    acc += pair.spatial(static_cast<double>(center));
    long long terms = 1;

    for (int dir : {+1, -1}) {
        double prev = pair.spatial(static_cast<double>(center + dir));
        acc += prev;
        ++terms;
        long long x = center + 2 * dir;
        for (;; x += dir) {
            double cur = pair.spatial(static_cast<double>(x));
            acc += cur;
            ++terms;
            if (terms > budget) throw AccuracyError("lattice sum exceeded the term budget");
            double ratio = prev > 0.0 ? cur / prev : 0.0;
            prev = cur;
            if (ratio < 1.0 && cur * ratio / (1.0 - ratio) < tol * 0.25) break;
            if (cur == 0.0) break;
        }
    }
    return {acc.value(), terms};
}

SumOutcome direct_outcome(const FourierPair& pair, double tol) {
    switch (pair.kind()) {
        case FourierPair::Kind::gauss:
        case FourierPair::Kind::two_sided_exponential:
            return log_concave_lattice_sum(pair, tol, kLatticeTermBudget);
        case FourierPair::Kind::cauchy_half: {
            RationalKernel k{1.0 / (kPi * pair.scale()), pair.mu(), pair.scale(), 1};
            return rational_lattice_sum(k, tol, kLatticeTermBudget);
        }
        case FourierPair::Kind::sq_cauchy_two_thirds: {
            RationalKernel k{2.0 / (kPi * pair.scale()), pair.mu(), pair.scale(), 2};
            return rational_lattice_sum(k, tol, kLatticeTermBudget);
        }
    }
    return {};
}

SumOutcome transformed_outcome(const FourierPair& pair, double tol) {
    if (pair.kind() == FourierPair::Kind::two_sided_exponential) {
        // fhat(k) = 1/(1+(2 pi mu k)^2): a Cauchy-shaped lattice sum in k.
        double sigma_eff = 1.0 / (2.0 * kPi * pair.scale());
        RationalKernel k{1.0, 0.0, sigma_eff, 1};
        return rational_lattice_sum(k, tol, kLatticeTermBudget);
    }

    // Exponentially decaying radial parts: partial sum with a closed-form
    // geometric bound on the remainder (|cos| <= 1).
    CompensatedSum acc;
    acc += 1.0;  // fhat(0), unit mass
    long long terms = 1;
    const double phase = 2.0 * kPi * pair.mu();
    for (long long k = 1;; ++k) {
        double radial = pair.transform_radial(static_cast<double>(k));
        acc += 2.0 * radial * std::cos(phase * static_cast<double>(k));
        ++terms;
        if (terms > kLatticeTermBudget)
            throw AccuracyError("transformed sum exceeded the term budget");

        double bound;
        if (pair.kind() == FourierPair::Kind::gauss) {
            // ratio e^{-2 pi^2 s^2 (2k+1)} shrinks with k
            double r = std::exp(-2.0 * kPi * kPi * pair.scale() * pair.scale() *
                                (2.0 * static_cast<double>(k) + 1.0));
            bound = 2.0 * radial * r / (1.0 - r);
        } else {
            double a = 2.0 * kPi * pair.scale();
            double r = std::exp(-a);
            double rm = std::pow(r, static_cast<double>(k + 1));
            if (pair.kind() == FourierPair::Kind::cauchy_half) {
                bound = 2.0 * rm / (1.0 - r);
            } else {
                // sum_{j>k} (1+a j) r^j evaluated in closed form
                double geo = rm / (1.0 - r);
                double jgeo = rm * (static_cast<double>(k + 1) + r / (1.0 - r)) / (1.0 - r);
                bound = 2.0 * (geo + a * jgeo);
            }
        }
        if (bound < tol * 0.5) break;
    }
    return {acc.value(), terms};
}

}  // namespace

double direct_sum(const FourierPair& pair, double tol) {
    if (!(tol >= 1e-14)) throw ParameterError("lattice sum tolerance must be >= 1e-14");
    return direct_outcome(pair, tol).value;
}

double transformed_sum(const FourierPair& pair, double tol) {
    if (!(tol >= 1e-14)) throw ParameterError("lattice sum tolerance must be >= 1e-14");
    return transformed_outcome(pair, tol).value;
}

LatticeSumResult lattice_sum(const FourierPair& pair, double tol) {
    if (!(tol >= 1e-14)) throw ParameterError("lattice sum tolerance must be >= 1e-14");
    SumOutcome d = direct_outcome(pair, tol);
    SumOutcome t = transformed_outcome(pair, tol);
    LatticeSumResult r;
    r.direct = d.value;
    r.transformed = t.value;
    r.discrepancy = std::abs(d.value - t.value);
    r.terms_used = d.terms + t.terms;
    return r;
}

double zprime(ZPrimeKind kind, double mu, double scale_or_mu) {
    switch (kind) {
        case ZPrimeKind::gaussian: {
            FourierPair pair = FourierPair::gauss(mu, scale_or_mu);
            // spatial terms decay fast for small sigma, frequency terms for
            // large sigma; crossover where both rates match
            if (scale_or_mu < 1.0 / std::sqrt(2.0 * kPi)) return direct_sum(pair);
            return transformed_sum(pair);
        }
        case ZPrimeKind::exponential: {
            if (!(scale_or_mu > 0.0)) throw ParameterError("exponential zprime requires mu > 0");
            // (1/mu) sum_{x in N} e^{-x/mu}: geometric closed form
            return 1.0 / (scale_or_mu * (-std::expm1(-1.0 / scale_or_mu)));
        }
        case ZPrimeKind::half_escort: {
            FourierPair pair = FourierPair::cauchy_half(mu, scale_or_mu);
            if (2.0 * kPi * scale_or_mu >= 0.5) return transformed_sum(pair);
            return direct_sum(pair);
        }
        case ZPrimeKind::two_thirds_escort: {
            FourierPair pair = FourierPair::sq_cauchy_two_thirds(mu, scale_or_mu);
            if (2.0 * kPi * scale_or_mu >= 0.5) return transformed_sum(pair);
            return direct_sum(pair);
        }
    }
    throw ParameterError("unknown zprime kind");
}

}  // namespace massent
