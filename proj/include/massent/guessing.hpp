#pragma once

#include <optional>

#include "massent/pmf.hpp"

namespace massent {

/// Law of the optimal guess count: rank k is hit with the k-th largest
/// probability of the underlying pmf.
struct GuessingProfile {
    DiscretePmf rank_pmf;  // support 1..M, probabilities nonincreasing
    double G = 1.0;        // mean number of guesses

    double moment(double rho) const;
};

/// Ranks the probabilities in nonincreasing order (ties broken by ascending
/// support value) and computes the guessing entropy G = sum k p_(k).
GuessingProfile guessing_profile(const DiscretePmf& pmf);

/// rho-th guessing moment sum k^rho p_(k); rho = 1 reproduces G.
double guessing_moment(const GuessingProfile& profile, double rho);

/// E_y[G_rho(X | Y = y)], each slice ranked independently.
double conditional_guessing(const JointPmf& joint, double rho);

/// G(X) >= 2^(H-2) + 1, stated only for H >= 2 bits; absent otherwise.
std::optional<double> lb_massey_original(double entropy_bits);

/// G(X) > 2^H / e + 1/2, valid for every H >= 0; also applies to H(X|Y).
double lb_improved(double entropy_bits);

/// G(X) > ((2a-1)/a)^(a/(1-a)) 2^(H_a) + 1/2 for alpha > 1/2.
double lb_renyi(double renyi_entropy_bits, double alpha);

enum class ArikanVariant { original, improved };

/// G(X|Y) >= 2^(H_1/2) / (1 + ln M), or the slightly improved denominator
/// ln(2M + 1), for alphabets of size M.
double lb_arikan(double half_entropy_bits, long long alphabet_size, ArikanVariant variant);

/// Finite-alphabet lower bound for Renyi orders 0 < alpha < 1/2.
double lb_small_alpha(double renyi_entropy_bits, double alpha, long long alphabet_size);

/// M-independent bound for 1/2 < alpha < 1; always weaker than lb_renyi.
double lb_mid_alpha(double renyi_entropy_bits, double alpha);

/// G_rho(X) > 2^(rho H) / (rho Gamma(1+1/rho)^rho e); rho = 1 gives 2^H / e.
double lb_moment(double entropy_bits, double rho);

/// G_rho(X) > 2^(rho H_a) / D(alpha, rho) for alpha > 1/(1+rho), with the
/// two-branch Gamma-ratio denominator.
double lb_moment_renyi(double renyi_entropy_bits, double alpha, double rho);

}  // namespace massent
