#include "massent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "massent/errors.hpp"
#include "massent/numeric.hpp"

namespace massent {

EntropyOrder EntropyOrder::renyi(double alpha) {
    if (!(alpha > 0.0))
        throw ValidityError("renyi order requires alpha > 0", 0.0);
    if (std::abs(alpha - 1.0) < kAlphaGuardBand)
        throw ValidityError("renyi order within the guard band around 1; use shannon", 1.0);
    return EntropyOrder(false, alpha);
}

std::string EntropyOrder::label() const {
    if (shannon_) return "shannon";
    std::ostringstream os;
    os << "renyi(" << alpha_ << ")";
    return os.str();
}

double discrete_entropy(const DiscretePmf& pmf, EntropyOrder order) {
    // Equiprobable laws have H_alpha = log2 n exactly for every order.
    if (pmf.equiprobable()) return std::log2(static_cast<double>(pmf.size()));

    if (order.is_shannon()) {
        CompensatedSum acc;
        for (double p : pmf.probs()) acc += -p * std::log2(p);
        return acc.value();
    }
    const double alpha = order.alpha();
    CompensatedSum acc;
    for (double p : pmf.probs()) acc += std::pow(p, alpha);
    return std::log2(acc.value()) / (1.0 - alpha);
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("binary_entropy requires p in [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    double q = 1.0 - p;
    return -p * std::log2(p) - q * std::log2(q);
}

DiscretePmf escort(const DiscretePmf& pmf, double alpha) {
    if (!(alpha > 0.0)) throw ParameterError("escort exponent must be > 0");
    double log_pmax = std::log(*std::max_element(pmf.probs().begin(), pmf.probs().end()));
    std::vector<std::pair<long long, double>> pts;
    pts.reserve(pmf.size());
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        // scaled by p_max^alpha so extreme exponents cannot overflow
        double w = std::exp(alpha * (std::log(pmf.probs()[i]) - log_pmax));
        pts.emplace_back(pmf.support()[i], w);
    }
    return DiscretePmf::from_points(std::move(pts));
}

double conditional_entropy(const JointPmf& joint, EntropyOrder order) {
    if (order.is_shannon()) {
        CompensatedSum acc;
        for (std::size_t j = 0; j < joint.y_size(); ++j) {
            CompensatedSum marg;
            for (std::size_t i = 0; i < joint.x_size(); ++i) marg += joint.prob(i, j);
            double py = marg.value();
            if (py <= 0.0) continue;
            CompensatedSum h;
            for (std::size_t i = 0; i < joint.x_size(); ++i) {
                double px = joint.prob(i, j) / py;
                if (px > 0.0) h += -px * std::log2(px);
            }
            acc += py * h.value();
        }
        return acc.value();
    }

    // Arimoto: H_alpha(X|Y) = alpha/(1-alpha) log2 sum_y (sum_x p(x,y)^alpha)^(1/alpha)
    const double alpha = order.alpha();
    CompensatedSum outer;
    for (std::size_t j = 0; j < joint.y_size(); ++j) {
        CompensatedSum inner;
        for (std::size_t i = 0; i < joint.x_size(); ++i) {
            double p = joint.prob(i, j);
            if (p > 0.0) inner += std::pow(p, alpha);
        }
        double s = inner.value();
        if (s > 0.0) outer += std::pow(s, 1.0 / alpha);
    }
    return alpha / (1.0 - alpha) * std::log2(outer.value());
}

}  // namespace massent
