#pragma once

#include <limits>
#include <string>

#include "massent/entropy.hpp"
#include "massent/quadrature.hpp"

namespace massent {

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
};

/// Closed-form maximum-entropy densities: the classical uniform / Gaussian /
/// exponential maximizers and their Renyi-order generalizations. The
/// alpha-exponential with alpha < 1 is the Lomax (Pareto II) density.
class MaxEntDensity {
  public:
    enum class Kind {
        uniform,
        gaussian,
        exponential,
        alpha_gaussian,
        alpha_exponential,
        generalized,
    };

    static MaxEntDensity uniform(double a, double b);
    static MaxEntDensity gaussian(double mu, double sigma);
    static MaxEntDensity exponential(double mu);
    /// Variance-constrained Renyi maximizer; requires alpha > 1/3.
    static MaxEntDensity alpha_gaussian(double alpha, double mu, double sigma);
    /// Mean-constrained one-sided Renyi maximizer; requires alpha > 1/2.
    static MaxEntDensity alpha_exponential(double alpha, double mu);
    /// rho-moment-constrained Renyi maximizer; requires alpha > 1/(1+rho).
    static MaxEntDensity generalized_alpha_gaussian(double alpha, double rho, double theta,
                                                    bool one_sided);

    Kind kind() const { return kind_; }
    bool is_alpha_variant() const;
    double alpha() const { return alpha_; }
    double rho() const { return rho_; }
    double theta() const { return theta_; }
    double mu() const { return mu_; }
    double sigma() const { return sigma_; }
    double a() const { return a_; }
    double b() const { return b_; }
    bool one_sided() const { return one_sided_; }
    /// Exponent-family parameter with sign(beta) = sign(1 - alpha).
    double beta() const { return beta_; }

    double operator()(double x) const;
    Interval support() const;
    std::string label() const;

  private:
    MaxEntDensity() = default;
    Kind kind_ = Kind::gaussian;
    double alpha_ = 1.0, rho_ = 2.0, theta_ = 1.0;
    double mu_ = 0.0, sigma_ = 1.0;
    double a_ = 0.0, b_ = 1.0;
    bool one_sided_ = false;
    double beta_ = 0.0;
    double log_norm_ = 0.0;  // log of the density's leading constant
};

inline double density_eval(const MaxEntDensity& d, double x) { return d(x); }

/// Normalizers of an alpha-variant density and of its alpha-power; their
/// ratio m is the extremal moment.
struct PartitionConstants {
    double Z = 0.0;
    double Z_alpha = 0.0;
    double m = 0.0;
};

/// Euler integral of the first kind in its two-sided convention:
///   gamma > 0:       int_{-1}^{1} (1 - |x|^rho)^gamma dx
///   gamma < -1/rho:  int_{-inf}^{inf} (1 + |x|^rho)^gamma dx
/// both equal to (2/rho) Gamma-ratio closed forms.
double euler_I(double gamma, double rho);

PartitionConstants partition_constants(const MaxEntDensity& d);

/// Moment constraint selector for maxent_bound().
struct Constraint {
    enum class Kind { support_length, variance, mean, rho_moment };
    Kind kind = Kind::variance;
    double value = 1.0;   // length / sigma^2 / mu / theta
    double rho = 2.0;     // rho_moment only
    bool one_sided = false;

    static Constraint support_length(double length);
    static Constraint variance(double sigma2);
    static Constraint mean(double mu);
    static Constraint rho_moment(double rho, double theta, bool one_sided);
};

/// Closed-form maximum of h_alpha under the constraint, in bits. The
/// one-sided flag removes the factor 2 inside the logarithm. Inadmissible
/// orders raise ValidityError carrying the threshold (1/3, 1/2, 1/(1+rho)).
double maxent_bound(const Constraint& constraint, EntropyOrder order);

struct QuadratureRenyiOptions {
    double integral_abs_tol = 1e-12;
    double integral_rel_tol = 1e-12;
    int max_intervals = 200000;
    double normalization_tol = 1e-8;
};

/// Differential (Renyi) entropy of an arbitrary density by adaptive
/// quadrature, in bits; the independent oracle used throughout the tests.
/// Rejects densities whose integral differs from 1 beyond the allowed slack.
double quadrature_renyi(const quad::Integrand& density, Interval support, EntropyOrder order,
                        std::span<const double> breakpoints = {},
                        const QuadratureRenyiOptions& opts = {});

/// Convenience overload with the density's natural support and edge-refined
/// breakpoints for compactly supported variants.
double quadrature_renyi(const MaxEntDensity& d, EntropyOrder order,
                        const QuadratureRenyiOptions& opts = {});

/// Closed-form differential entropy in bits. Supported for the classical
/// kinds at every order, and for alpha-variants at their own order (where it
/// equals the matching maxent_bound).
double differential_entropy(const MaxEntDensity& d, EntropyOrder order);

}  // namespace massent
