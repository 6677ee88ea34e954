#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "massent/entropy.hpp"

namespace massent {

/// One admissibility condition checked while forming a bound.
struct ValidityCheck {
    std::string condition;
    bool satisfied = true;
};

/// Evaluated upper bound on a discrete entropy, optionally compared against
/// the exact entropy of a concrete pmf.
struct BoundReport {
    std::string name;
    std::string formula;  // human-readable closed form of the bound
    double bound_bits = 0.0;
    std::optional<double> subject_bits;
    std::optional<bool> holds;
    std::optional<double> gap_bits;
    bool strict = true;  // paper-asserted strict inequality
    std::vector<ValidityCheck> validity;

    /// Fills subject/holds/gap against a known subject entropy.
    BoundReport& against(double subject);
};

/// Either the full integer lattice or an explicit support set for the mixed
/// bounds (a restricted support always tightens them).
struct SupportSpec {
    bool all_integers = true;
    std::vector<long long> points;

    static SupportSpec integers() { return {}; }
    static SupportSpec naturals_up_to(long long n);
    static SupportSpec explicit_set(std::vector<long long> pts);
    static SupportSpec of(const DiscretePmf& pmf);
};

/// Massey-type variance bound: H_alpha(X) < maxent bound at sigma^2 + 1/12.
/// Admissible for shannon and alpha > 1/3.
BoundReport massey_variance(double sigma2, EntropyOrder order);

/// Mean bound for nonnegative X: H(X) < log2(e (mu + 1/2)); Renyi version
/// for alpha > 1/2.
BoundReport mean_bound(double mu, EntropyOrder order);

/// H_alpha(X) <= log2(l + 1) for support length l; order independent,
/// achieved by equiprobable laws.
BoundReport support_bound(long long support_length);

/// Poisson-summation-improved variance bounds for shannon, alpha = 1/2 and
/// alpha = 2/3: the 1/12 correction becomes exponentially small in sigma.
BoundReport improved_variance(double sigma2, EntropyOrder order);

/// Coefficient c_k = 4 sqrt(2k+1) C(2k,k) ((k+1)/(2(2k+1)))^{k+1} of the
/// improved bounds at alpha = (k+1)/(k+2).
double c_k(int k);

/// Mixed discrete-continuous variance bound: the escort lattice sum over the
/// given support. Non-strict (achieved e.g. by Bernoulli(1/2)).
BoundReport mixed_variance(const SupportSpec& support, double mu, double sigma2,
                           EntropyOrder order);

/// Mixed mean bound over the nonnegative integers (geometric closed form for
/// shannon) or an explicit support.
BoundReport mixed_mean(double mu, EntropyOrder order,
                       const SupportSpec& support = SupportSpec::integers());

/// The pure-Gaussian bound H(X) < (1/2) log2(2 pi e sigma^2) for nonnegative
/// integer-valued X; `holds` is asserted only when the sufficient condition
/// (2 pi sigma^2 > 1 and (2 pi sigma)^2 > ((mu+1)/sigma)^2 + ln(8 pi sigma^2))
/// is satisfied.
BoundReport gaussian_condition(double mu, double sigma2);

}  // namespace massent
