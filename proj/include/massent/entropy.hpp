#pragma once

#include <string>

#include "massent/pmf.hpp"

namespace massent {

/// Entropy order selector: Shannon or Renyi of order alpha. Renyi evaluation
/// is catastrophically ill-conditioned near alpha = 1, so orders within 1e-6
/// of 1 are rejected; callers wanting the limit ask for shannon explicitly.
class EntropyOrder {
  public:
    static EntropyOrder shannon() { return EntropyOrder(true, 1.0); }
    static EntropyOrder renyi(double alpha);

    bool is_shannon() const { return shannon_; }
    double alpha() const { return alpha_; }
    std::string label() const;

  private:
    EntropyOrder(bool shannon, double alpha) : shannon_(shannon), alpha_(alpha) {}
    bool shannon_;
    double alpha_;
};

inline constexpr double kAlphaGuardBand = 1e-6;

/// Discrete Shannon or Renyi entropy in bits.
double discrete_entropy(const DiscretePmf& pmf, EntropyOrder order);

/// H_b(p) = p log2(1/p) + (1-p) log2(1/(1-p)), in bits.
double binary_entropy(double p);

/// Escort distribution of exponent alpha: probabilities p^alpha renormalized
/// over the same support.
DiscretePmf escort(const DiscretePmf& pmf, double alpha);

/// Shannon conditional entropy H(X|Y), or Arimoto conditional alpha-entropy
/// via the exponential aggregation of per-y Renyi entropies. In bits.
double conditional_entropy(const JointPmf& joint, EntropyOrder order);

}  // namespace massent
