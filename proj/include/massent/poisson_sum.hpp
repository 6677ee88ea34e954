#pragma once

#include <string>

namespace massent {

/// One row of the Fourier-pair table used by the lattice-sum machinery.
/// Every pair is normalized to unit total mass, so the zero-frequency term
/// of the transformed sum is exactly 1.
class FourierPair {
  public:
    enum class Kind { gauss, two_sided_exponential, cauchy_half, sq_cauchy_two_thirds };

    static FourierPair gauss(double mu, double sigma);
    /// Symmetrized exponential e^{-|x|/mu} / (2 mu); transform 1/(1+(2 pi mu t)^2).
    static FourierPair two_sided_exponential(double mu_scale);
    /// Cauchy density (the 1/2-escort of the 1/2-Gaussian).
    static FourierPair cauchy_half(double mu, double sigma);
    /// Squared-Cauchy density (the 2/3-escort family member).
    static FourierPair sq_cauchy_two_thirds(double mu, double sigma);

    Kind kind() const { return kind_; }
    double mu() const { return mu_; }
    double scale() const { return scale_; }

    /// Spatial density f(x).
    double spatial(double x) const;
    /// Radial factor of the transform: fhat(t) = e^{-2 i pi mu t} radial(|t|).
    double transform_radial(double t) const;

    std::string label() const;

  private:
    FourierPair(Kind kind, double mu, double scale);
    Kind kind_;
    double mu_;
    double scale_;
};

struct LatticeSumResult {
    double direct = 0.0;
    double transformed = 0.0;
    double discrepancy = 0.0;
    long long terms_used = 0;
};

inline constexpr double kLatticeTolDefault = 1e-13;
inline constexpr long long kLatticeTermBudget = 1000000;

/// Sum of f(x) over all integers, truncated when the analytic tail bound
/// drops below tol. Slowly decaying kernels get Euler-Maclaurin tail
/// corrections instead of raw truncation.
double direct_sum(const FourierPair& pair, double tol = kLatticeTolDefault);

/// Sum of fhat(x) over all integers: 1 + 2 sum_{k>=1} radial(k) cos(2 pi mu k).
double transformed_sum(const FourierPair& pair, double tol = kLatticeTolDefault);

/// Both sums plus their discrepancy; the Poisson identity says it vanishes.
LatticeSumResult lattice_sum(const FourierPair& pair, double tol = kLatticeTolDefault);

enum class ZPrimeKind { gaussian, exponential, half_escort, two_thirds_escort };

/// Lattice sums of the named (escort) densities, evaluated through whichever
/// side of the Poisson identity converges faster. The exponential kind sums
/// over the nonnegative integers only: (1/mu) sum_{x in N} e^{-x/mu}.
double zprime(ZPrimeKind kind, double mu, double scale_or_mu);

}  // namespace massent
