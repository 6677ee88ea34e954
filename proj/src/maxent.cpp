#include "massent/maxent.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "massent/errors.hpp"
#include "massent/numeric.hpp"
#include "massent/special.hpp"

namespace massent {

namespace {

void require_alpha_away_from_one(double alpha) {
    if (std::abs(alpha - 1.0) < kAlphaGuardBand)
        throw ValidityError("alpha within the guard band around 1; use the Shannon variant", 1.0);
}

// Leading constant of the generalized density, in log space. theta and beta
// are the moment parameter and the exponent-family parameter; the factor 2
// in the denominator disappears for one-sided supports.
double generalized_log_norm(double alpha, double rho, double theta, double beta,
                            bool one_sided) {
    double lg;
    if (alpha < 1.0) {
        lg = log_gamma(1.0 / (1.0 - alpha)) - log_gamma(1.0 + 1.0 / rho) -
             log_gamma(1.0 / (1.0 - alpha) - 1.0 / rho);
    } else {
        lg = log_gamma(alpha / (alpha - 1.0) + 1.0 / rho) - log_gamma(1.0 + 1.0 / rho) -
             log_gamma(alpha / (alpha - 1.0));
    }
    double ln = std::log(std::abs(beta) / theta) / rho + lg;
    if (!one_sided) ln -= std::numbers::ln2;
    return ln;
}

// Density kernel of the generalized form, centered at zero.
double generalized_value(double alpha, double rho, double theta, double beta,
                         bool one_sided, double log_norm, double x) {
    if (one_sided && x < 0.0) return 0.0;
    double w = 1.0 + beta * std::pow(std::abs(x), rho) / theta;
    if (alpha > 1.0) {
        if (w <= 0.0) return 0.0;
        return std::exp(log_norm + std::log(w) / (alpha - 1.0));
    }
    return std::exp(log_norm - std::log(w) / (1.0 - alpha));
}

}  // namespace

MaxEntDensity MaxEntDensity::uniform(double a, double b) {
    if (!(b > a)) throw ParameterError("uniform density requires b > a");
    MaxEntDensity d;
    d.kind_ = Kind::uniform;
    d.a_ = a;
    d.b_ = b;
    return d;
}

MaxEntDensity MaxEntDensity::gaussian(double mu, double sigma) {
    if (!(sigma > 0.0)) throw ParameterError("gaussian density requires sigma > 0");
    MaxEntDensity d;
    d.kind_ = Kind::gaussian;
    d.mu_ = mu;
    d.sigma_ = sigma;
    d.log_norm_ = -0.5 * std::log(2.0 * kPi * sigma * sigma);
    return d;
}

MaxEntDensity MaxEntDensity::exponential(double mu) {
    if (!(mu > 0.0)) throw ParameterError("exponential density requires mu > 0");
    MaxEntDensity d;
    d.kind_ = Kind::exponential;
    d.mu_ = mu;
    d.one_sided_ = true;
    return d;
}

MaxEntDensity MaxEntDensity::alpha_gaussian(double alpha, double mu, double sigma) {
    if (!(sigma > 0.0)) throw ParameterError("alpha_gaussian requires sigma > 0");
    if (!(alpha > 1.0 / 3.0))
        throw ValidityError("alpha_gaussian requires alpha > 1/3", 1.0 / 3.0);
    require_alpha_away_from_one(alpha);
    MaxEntDensity d;
    d.kind_ = Kind::alpha_gaussian;
    d.alpha_ = alpha;
    d.rho_ = 2.0;
    d.theta_ = sigma * sigma;
    d.mu_ = mu;
    d.sigma_ = sigma;
    d.beta_ = (1.0 - alpha) / (3.0 * alpha - 1.0);
    d.log_norm_ = generalized_log_norm(alpha, 2.0, d.theta_, d.beta_, false);
    return d;
}

MaxEntDensity MaxEntDensity::alpha_exponential(double alpha, double mu) {
    if (!(mu > 0.0)) throw ParameterError("alpha_exponential requires mu > 0");
    if (!(alpha > 0.5)) throw ValidityError("alpha_exponential requires alpha > 1/2", 0.5);
    require_alpha_away_from_one(alpha);
    MaxEntDensity d;
    d.kind_ = Kind::alpha_exponential;
    d.alpha_ = alpha;
    d.rho_ = 1.0;
    d.theta_ = mu;
    d.mu_ = mu;
    d.one_sided_ = true;
    d.beta_ = (1.0 - alpha) / (2.0 * alpha - 1.0);
    d.log_norm_ = generalized_log_norm(alpha, 1.0, mu, d.beta_, true);
    return d;
}

MaxEntDensity MaxEntDensity::generalized_alpha_gaussian(double alpha, double rho, double theta,
                                                        bool one_sided) {
    if (!(rho > 0.0)) throw ParameterError("generalized density requires rho > 0");
    if (!(theta > 0.0)) throw ParameterError("generalized density requires theta > 0");
    double threshold = 1.0 / (1.0 + rho);
    if (!(alpha > threshold))
        throw ValidityError("generalized density requires alpha > 1/(1+rho)", threshold);
    require_alpha_away_from_one(alpha);
    MaxEntDensity d;
    d.kind_ = Kind::generalized;
    d.alpha_ = alpha;
    d.rho_ = rho;
    d.theta_ = theta;
    d.one_sided_ = one_sided;
    d.beta_ = (1.0 - alpha) / ((1.0 + rho) * alpha - 1.0);
    d.log_norm_ = generalized_log_norm(alpha, rho, theta, d.beta_, one_sided);
    return d;
}

bool MaxEntDensity::is_alpha_variant() const {
    return kind_ == Kind::alpha_gaussian || kind_ == Kind::alpha_exponential ||
           kind_ == Kind::generalized;
}

double MaxEntDensity::operator()(double x) const {
    switch (kind_) {
        case Kind::uniform:
            return (x > a_ && x < b_) ? 1.0 / (b_ - a_) : 0.0;
        case Kind::gaussian: {
            double u = (x - mu_) / sigma_;
            return std::exp(log_norm_ - 0.5 * u * u);
        }
        case Kind::exponential:
            return x >= 0.0 ? std::exp(-x / mu_) / mu_ : 0.0;
        case Kind::alpha_gaussian:
            return generalized_value(alpha_, 2.0, theta_, beta_, false, log_norm_, x - mu_);
        case Kind::alpha_exponential:
            return generalized_value(alpha_, 1.0, theta_, beta_, true, log_norm_, x);
        case Kind::generalized:
            return generalized_value(alpha_, rho_, theta_, beta_, one_sided_, log_norm_, x);
    }
    return 0.0;
}

Interval MaxEntDensity::support() const {
    const double inf = std::numeric_limits<double>::infinity();
    switch (kind_) {
        case Kind::uniform:
            return {a_, b_};
        case Kind::gaussian:
            return {-inf, inf};
        case Kind::exponential:
            return {0.0, inf};
        case Kind::alpha_gaussian:
            if (alpha_ > 1.0) {
                double half = sigma_ / std::sqrt(std::abs(beta_));
                return {mu_ - half, mu_ + half};
            }
            return {-inf, inf};
        case Kind::alpha_exponential:
            if (alpha_ > 1.0) return {0.0, mu_ / std::abs(beta_)};
            return {0.0, inf};
        case Kind::generalized: {
            if (alpha_ > 1.0) {
                double edge = std::pow(theta_ / std::abs(beta_), 1.0 / rho_);
                return {one_sided_ ? 0.0 : -edge, edge};
            }
            return {one_sided_ ? 0.0 : -inf, inf};
        }
    }
    return {-inf, inf};
}

std::string MaxEntDensity::label() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::uniform: os << "uniform(" << a_ << "," << b_ << ")"; break;
        case Kind::gaussian: os << "gaussian(" << mu_ << "," << sigma_ << ")"; break;
        case Kind::exponential: os << "exponential(" << mu_ << ")"; break;
        case Kind::alpha_gaussian:
            os << "alpha_gaussian(" << alpha_ << "," << mu_ << "," << sigma_ << ")";
            break;
        case Kind::alpha_exponential:
            os << "alpha_exponential(" << alpha_ << "," << mu_ << ")";
            break;
        case Kind::generalized:
            os << "generalized(" << alpha_ << ",rho=" << rho_ << ",theta=" << theta_
               << (one_sided_ ? ",one-sided" : "") << ")";
            break;
    }
    return os.str();
}

double euler_I(double gamma, double rho) {
    if (!(rho > 0.0)) throw ParameterError("euler_I requires rho > 0");
    if (gamma > 0.0) {
        return (2.0 / rho) * std::exp(log_gamma(1.0 / rho) + log_gamma(gamma + 1.0) -
                                      log_gamma(gamma + 1.0 + 1.0 / rho));
    }
    if (gamma < -1.0 / rho) {
        return (2.0 / rho) * std::exp(log_gamma(1.0 / rho) + log_gamma(-gamma - 1.0 / rho) -
                                      log_gamma(-gamma));
    }
    throw ParameterError("euler_I undefined for -1/rho <= gamma <= 0");
}

PartitionConstants partition_constants(const MaxEntDensity& d) {
    if (!d.is_alpha_variant())
        throw UnsupportedVariantError("partition constants exist only for alpha variants");
    const double alpha = d.alpha();
    const double rho = d.rho();
    const double scale = std::pow(d.theta() / std::abs(d.beta()), 1.0 / rho);
    const double side = d.one_sided() ? 0.5 : 1.0;

    PartitionConstants pc;
    pc.Z = side * scale * euler_I(1.0 / (alpha - 1.0), rho);
    if (d.kind() == MaxEntDensity::Kind::alpha_exponential)
        pc.Z_alpha = d.mu();  // exact for the mean case
    else
        pc.Z_alpha = side * scale * euler_I(alpha / (alpha - 1.0), rho);
    pc.m = pc.Z_alpha / pc.Z;
    return pc;
}

Constraint Constraint::support_length(double length) {
    Constraint c;
    c.kind = Kind::support_length;
    c.value = length;
    return c;
}

Constraint Constraint::variance(double sigma2) {
    Constraint c;
    c.kind = Kind::variance;
    c.value = sigma2;
    return c;
}

Constraint Constraint::mean(double mu) {
    Constraint c;
    c.kind = Kind::mean;
    c.value = mu;
    c.one_sided = true;
    return c;
}

Constraint Constraint::rho_moment(double rho, double theta, bool one_sided) {
    Constraint c;
    c.kind = Kind::rho_moment;
    c.value = theta;
    c.rho = rho;
    c.one_sided = one_sided;
    return c;
}

namespace {

double rho_moment_bound_bits(double alpha, double rho, double theta, bool one_sided) {
    double first, second, lg;
    if (alpha < 1.0) {
        first = std::log2(((1.0 + rho) * alpha - 1.0) / (1.0 - alpha) * theta) / rho;
        second = std::log2(rho * alpha / ((1.0 + rho) * alpha - 1.0)) / (1.0 - alpha);
        lg = log_gamma(1.0 / rho + 1.0) + log_gamma(1.0 / (1.0 - alpha) - 1.0 / rho) -
             log_gamma(1.0 / (1.0 - alpha));
    } else {
        first = std::log2(((1.0 + rho) * alpha - 1.0) / (alpha - 1.0) * theta) / rho;
        second = std::log2(((1.0 + rho) * alpha - 1.0) / (rho * alpha)) / (alpha - 1.0);
        lg = log_gamma(1.0 / rho + 1.0) + log_gamma(alpha / (alpha - 1.0)) -
             log_gamma(alpha / (alpha - 1.0) + 1.0 / rho);
    }
    double bits = first + second + lg * kLog2E;
    if (!one_sided) bits += 1.0;  // the factor 2 inside the logarithm
    return bits;
}

}  // namespace

double maxent_bound(const Constraint& c, EntropyOrder order) {
    switch (c.kind) {
        case Constraint::Kind::support_length:
            if (!(c.value > 0.0)) throw ParameterError("support length must be > 0");
            return std::log2(c.value);

        case Constraint::Kind::variance: {
            if (!(c.value > 0.0)) throw ParameterError("variance must be > 0");
            if (order.is_shannon()) return 0.5 * std::log2(2.0 * kPi * kE * c.value);
            if (!(order.alpha() > 1.0 / 3.0))
                throw ValidityError("variance bound requires alpha > 1/3", 1.0 / 3.0);
            return rho_moment_bound_bits(order.alpha(), 2.0, c.value, false);
        }

        case Constraint::Kind::mean: {
            if (!(c.value > 0.0)) throw ParameterError("mean must be > 0");
            if (order.is_shannon()) return std::log2(kE * c.value);
            double alpha = order.alpha();
            if (!(alpha > 0.5)) throw ValidityError("mean bound requires alpha > 1/2", 0.5);
            return std::log2(c.value) +
                   alpha / (1.0 - alpha) * std::log2(alpha / (2.0 * alpha - 1.0));
        }

        case Constraint::Kind::rho_moment: {
            if (!(c.rho > 0.0)) throw ParameterError("rho must be > 0");
            if (!(c.value > 0.0)) throw ParameterError("theta must be > 0");
            if (order.is_shannon()) {
                double bits = std::log2(c.rho * kE * c.value) / c.rho +
                              log_gamma(1.0 + 1.0 / c.rho) * kLog2E;
                if (!c.one_sided) bits += 1.0;
                return bits;
            }
            double threshold = 1.0 / (1.0 + c.rho);
            if (!(order.alpha() > threshold))
                throw ValidityError("rho-moment bound requires alpha > 1/(1+rho)", threshold);
            return rho_moment_bound_bits(order.alpha(), c.rho, c.value, c.one_sided);
        }
    }
    throw ParameterError("unknown constraint");
}

namespace {

quad::Result integrate_over(const quad::Integrand& g, Interval support,
                            std::span<const double> breakpoints, const quad::Options& qo) {
    const bool lo_inf = std::isinf(support.lo);
    const bool hi_inf = std::isinf(support.hi);
    if (!lo_inf && !hi_inf) return quad::integrate(g, support.lo, support.hi, breakpoints, qo);
    if (lo_inf && hi_inf) {
        std::vector<double> mapped;
        for (double x : breakpoints) {
            // invert x = t/(1-t^2)
            double t = x == 0.0 ? 0.0 : (std::sqrt(1.0 + 4.0 * x * x) - 1.0) / (2.0 * x);
            mapped.push_back(t);
        }
        auto h = [&g](double t) {
            double den = 1.0 - t * t;
            double x = t / den;
            double y = g(x);
            return y == 0.0 ? 0.0 : y * (1.0 + t * t) / (den * den);
        };
        return quad::integrate(h, -1.0, 1.0, mapped, qo);
    }
    if (!lo_inf && hi_inf) {
        double a = support.lo;
        std::vector<double> mapped;
        for (double x : breakpoints)
            if (x > a) mapped.push_back((x - a) / (1.0 + x - a));
        auto h = [&g, a](double t) {
            double den = 1.0 - t;
            double x = a + t / den;
            double y = g(x);
            return y == 0.0 ? 0.0 : y / (den * den);
        };
        return quad::integrate(h, 0.0, 1.0, mapped, qo);
    }
    // (-inf, b]: mirror
    double b = support.hi;
    auto mirrored = [&g, b](double u) { return g(b - u); };
    return integrate_over(mirrored, {0.0, std::numeric_limits<double>::infinity()}, {}, qo);
}

}  // namespace

double quadrature_renyi(const quad::Integrand& density, Interval support, EntropyOrder order,
                        std::span<const double> breakpoints,
                        const QuadratureRenyiOptions& opts) {
    quad::Options qo;
    qo.abs_tol = opts.integral_abs_tol;
    qo.rel_tol = opts.integral_rel_tol;
    qo.max_intervals = opts.max_intervals;

    quad::Result norm = integrate_over(density, support, breakpoints, qo);
    if (!norm.converged)
        throw AccuracyError("quadrature did not converge while normalizing the density");
    if (std::abs(norm.value - 1.0) > opts.normalization_tol)
        throw ValidationError("density is not normalized to 1");

    quad::Result res;
    if (order.is_shannon()) {
        auto g = [&density](double x) {
            double f = density(x);
            return f > 0.0 ? -f * std::log2(f) : 0.0;
        };
        res = integrate_over(g, support, breakpoints, qo);
        if (!res.converged) throw AccuracyError("entropy quadrature did not converge");
        return res.value;
    }
    const double alpha = order.alpha();
    auto g = [&density, alpha](double x) {
        double f = density(x);
        return f > 0.0 ? std::pow(f, alpha) : 0.0;
    };
    res = integrate_over(g, support, breakpoints, qo);
    if (!res.converged) throw AccuracyError("entropy quadrature did not converge");
    return std::log2(res.value) / (1.0 - alpha);
}

double quadrature_renyi(const MaxEntDensity& d, EntropyOrder order,
                        const QuadratureRenyiOptions& opts) {
    Interval s = d.support();
    std::vector<double> pts;
    if (std::isfinite(s.lo) && std::isfinite(s.hi)) {
        double mid = 0.5 * (s.lo + s.hi);
        auto up = quad::edge_refined_breakpoints(mid, s.hi);
        auto down = quad::edge_refined_breakpoints(mid, s.lo);
        pts.insert(pts.end(), up.begin(), up.end());
        pts.insert(pts.end(), down.begin(), down.end());
        pts.push_back(mid);
    } else if (std::isfinite(s.lo)) {
        pts.push_back(s.lo + 1.0);  // split the mass near the lower edge
    }
    return quadrature_renyi([&d](double x) { return d(x); }, s, order, pts, opts);
}

double differential_entropy(const MaxEntDensity& d, EntropyOrder order) {
    switch (d.kind()) {
        case MaxEntDensity::Kind::uniform:
            return std::log2(d.b() - d.a());
        case MaxEntDensity::Kind::gaussian: {
            double s2 = d.sigma() * d.sigma();
            if (order.is_shannon()) return 0.5 * std::log2(2.0 * kPi * kE * s2);
            double a = order.alpha();
            return 0.5 * std::log2(2.0 * kPi * s2) + std::log2(a) / (2.0 * (a - 1.0));
        }
        case MaxEntDensity::Kind::exponential: {
            if (order.is_shannon()) return std::log2(kE * d.mu());
            double a = order.alpha();
            return std::log2(d.mu()) + std::log2(a) / (a - 1.0);
        }
        default:
            break;
    }
    // alpha variants: closed form available at their own order, where the
    // density achieves the matching maxent bound with equality.
    if (order.is_shannon() || std::abs(order.alpha() - d.alpha()) > 1e-12)
        throw UnsupportedVariantError(
            "closed-form entropy of an alpha variant is only available at its own order");
    switch (d.kind()) {
        case MaxEntDensity::Kind::alpha_gaussian:
            return maxent_bound(Constraint::variance(d.sigma() * d.sigma()), order);
        case MaxEntDensity::Kind::alpha_exponential:
            return maxent_bound(Constraint::mean(d.mu()), order);
        case MaxEntDensity::Kind::generalized:
            return maxent_bound(Constraint::rho_moment(d.rho(), d.theta(), d.one_sided()), order);
        default:
            throw UnsupportedVariantError("unexpected density kind");
    }
}

}  // namespace massent
