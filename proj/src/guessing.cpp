#include "massent/guessing.hpp"

#include <algorithm>
#include <cmath>

#include "massent/entropy.hpp"
#include "massent/errors.hpp"
#include "massent/maxent.hpp"
#include "massent/numeric.hpp"

namespace massent {

double GuessingProfile::moment(double rho) const { return guessing_moment(*this, rho); }

GuessingProfile guessing_profile(const DiscretePmf& pmf) {
    std::vector<std::pair<double, long long>> entries;
    entries.reserve(pmf.size());
    for (std::size_t i = 0; i < pmf.size(); ++i)
        entries.emplace_back(pmf.probs()[i], pmf.support()[i]);
    // nonincreasing probability, ties by ascending support value
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });

    std::vector<std::pair<long long, double>> ranked;
    ranked.reserve(entries.size());
    CompensatedSum g;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        ranked.emplace_back(static_cast<long long>(k) + 1, entries[k].first);
        g += static_cast<double>(k + 1) * entries[k].first;
    }

    GuessingProfile profile{DiscretePmf::from_points(std::move(ranked)), g.value()};
    return profile;
}

double guessing_moment(const GuessingProfile& profile, double rho) {
    if (!(rho > 0.0)) throw ParameterError("guessing moment requires rho > 0");
    CompensatedSum acc;
    for (std::size_t i = 0; i < profile.rank_pmf.size(); ++i) {
        double k = static_cast<double>(profile.rank_pmf.support()[i]);
        double kr = rho == 1.0 ? k : std::pow(k, rho);
        acc += kr * profile.rank_pmf.probs()[i];
    }
    return acc.value();
}

double conditional_guessing(const JointPmf& joint, double rho) {
    if (!(rho > 0.0)) throw ParameterError("guessing moment requires rho > 0");
    CompensatedSum acc;
    for (std::size_t j = 0; j < joint.y_size(); ++j) {
        double marginal = 0.0;
        for (std::size_t i = 0; i < joint.x_size(); ++i) marginal += joint.prob(i, j);
        if (marginal <= 0.0) continue;
        auto [slice, py] = joint.conditional_slice_index(j);
        acc += py * guessing_moment(guessing_profile(slice), rho);
    }
    return acc.value();
}

std::optional<double> lb_massey_original(double entropy_bits) {
    if (entropy_bits < 2.0) return std::nullopt;
    return std::exp2(entropy_bits - 2.0) + 1.0;
}

double lb_improved(double entropy_bits) {
    if (entropy_bits < 0.0) throw ParameterError("entropy must be >= 0");
    return std::exp2(entropy_bits) / kE + 0.5;
}

double lb_renyi(double renyi_entropy_bits, double alpha) {
    if (!(alpha > 0.5))
        throw ValidityError("guessing bounds cannot exist for alpha <= 1/2", 0.5);
    if (std::abs(alpha - 1.0) < kAlphaGuardBand)
        throw ValidityError("use lb_improved for the Shannon case", 1.0);
    double log2_factor = alpha / (1.0 - alpha) * std::log2((2.0 * alpha - 1.0) / alpha);
    return std::exp2(renyi_entropy_bits + log2_factor) + 0.5;
}

double lb_arikan(double half_entropy_bits, long long alphabet_size, ArikanVariant variant) {
    if (alphabet_size < 1) throw ParameterError("alphabet size must be >= 1");
    double m = static_cast<double>(alphabet_size);
    double denom = variant == ArikanVariant::original ? 1.0 + std::log(m)
                                                      : std::log(2.0 * m + 1.0);
    return std::exp2(half_entropy_bits) / denom;
}

double lb_small_alpha(double renyi_entropy_bits, double alpha, long long alphabet_size) {
    if (!(alpha > 0.0 && alpha < 0.5))
        throw ValidityError("this bound requires 0 < alpha < 1/2", 0.5);
    if (alphabet_size < 1) throw ParameterError("alphabet size must be >= 1");
    double m2 = 2.0 * static_cast<double>(alphabet_size) + 1.0;
    double r = (1.0 - alpha) / alpha;
    double log2_bound = r * std::log2((1.0 - 2.0 * alpha) / (1.0 - alpha)) +
                        r * renyi_entropy_bits + (1.0 - 2.0 * alpha) / alpha -
                        (1.0 - 2.0 * alpha) / alpha * std::log2(m2);
    return std::exp2(log2_bound);
}

double lb_mid_alpha(double renyi_entropy_bits, double alpha) {
    if (!(alpha > 0.5 && alpha < 1.0))
        throw ValidityError("this bound requires 1/2 < alpha < 1", 0.5);
    double r = (1.0 - alpha) / alpha;
    double log2_bound = r * std::log2((2.0 * alpha - 1.0) / (1.0 - alpha)) +
                        r * renyi_entropy_bits - (2.0 * alpha - 1.0) / alpha;
    return std::exp2(log2_bound);
}

double lb_moment(double entropy_bits, double rho) {
    if (!(rho > 0.0)) throw ParameterError("guessing moment requires rho > 0");
    // denominator: rho times the one-sided rho-moment maxent bound at theta=1
    double log2_denom =
        rho * maxent_bound(Constraint::rho_moment(rho, 1.0, true), EntropyOrder::shannon());
    return std::exp2(rho * entropy_bits - log2_denom);
}

double lb_moment_renyi(double renyi_entropy_bits, double alpha, double rho) {
    if (!(rho > 0.0)) throw ParameterError("guessing moment requires rho > 0");
    double threshold = 1.0 / (1.0 + rho);
    if (!(alpha > threshold))
        throw ValidityError("moment guessing bounds require alpha > 1/(1+rho)", threshold);
    if (std::abs(alpha - 1.0) < kAlphaGuardBand)
        throw ValidityError("use lb_moment for the Shannon case", 1.0);
    double log2_denom = rho * maxent_bound(Constraint::rho_moment(rho, 1.0, true),
                                           EntropyOrder::renyi(alpha));
    return std::exp2(rho * renyi_entropy_bits - log2_denom);
}

}  // namespace massent
