#include "massent/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "massent/errors.hpp"
#include "massent/numeric.hpp"
#include "massent/special.hpp"

namespace massent {

DiscretePmf DiscretePmf::from_points(std::vector<std::pair<long long, double>> points,
                                     double tail_mass_bound) {
    if (tail_mass_bound < 0.0) throw ValidationError("tail_mass_bound must be >= 0");
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    DiscretePmf pmf;
    pmf.tail_mass_bound_ = tail_mass_bound;
    CompensatedSum total;
    long long prev = 0;
    bool have_prev = false;
    for (const auto& [value, prob] : points) {
        if (std::isnan(prob) || prob < 0.0)
            throw ValidationError("probability mass must be nonnegative");
        if (have_prev && value == prev)
            throw ValidationError("duplicate support value " + std::to_string(value));
        prev = value;
        have_prev = true;
        if (prob == 0.0) continue;  // zero atoms dropped at construction
        pmf.support_.push_back(value);
        pmf.probs_.push_back(prob);
        total += prob;
    }
    if (pmf.support_.empty()) throw ValidationError("pmf has no positive mass");
    double norm = total.value();
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw ValidationError("pmf mass is not finite and positive");
    for (double& p : pmf.probs_) p /= norm;
    return pmf;
}

double DiscretePmf::mean() const {
    CompensatedSum acc;
    for (std::size_t i = 0; i < size(); ++i)
        acc += static_cast<double>(support_[i]) * probs_[i];
    return acc.value();
}

double DiscretePmf::variance() const { return moment(2.0, true); }

double DiscretePmf::moment(double rho, bool centered, bool one_sided) const {
    if (!(rho > 0.0)) throw ParameterError("moment order rho must be > 0");
    if (one_sided && support_min() < 0)
        throw ParameterError("one-sided moment requires nonnegative support");
    const double c = centered ? mean() : 0.0;
    CompensatedSum acc;
    for (std::size_t i = 0; i < size(); ++i) {
        double d = std::abs(static_cast<double>(support_[i]) - c);
        acc += (rho == 2.0 ? d * d : std::pow(d, rho)) * probs_[i];
    }
    return acc.value();
}

DiscretePmf DiscretePmf::translated(long long c) const {
    DiscretePmf out = *this;
    for (long long& v : out.support_) v += c;
    return out;
}

bool DiscretePmf::equiprobable() const {
    for (double p : probs_)
        if (p != probs_.front()) return false;
    return true;
}

JointPmf JointPmf::from_matrix(std::vector<long long> x_support,
                               std::vector<long long> y_support,
                               std::vector<double> probs) {
    if (x_support.empty() || y_support.empty())
        throw ValidationError("joint pmf needs nonempty supports");
    if (probs.size() != x_support.size() * y_support.size())
        throw ValidationError("joint pmf matrix shape mismatch");
    if (!std::is_sorted(x_support.begin(), x_support.end()) ||
        std::adjacent_find(x_support.begin(), x_support.end()) != x_support.end())
        throw ValidationError("x support must be strictly increasing");
    if (!std::is_sorted(y_support.begin(), y_support.end()) ||
        std::adjacent_find(y_support.begin(), y_support.end()) != y_support.end())
        throw ValidationError("y support must be strictly increasing");

    CompensatedSum total;
    for (double p : probs) {
        if (std::isnan(p) || p < 0.0) throw ValidationError("joint probabilities must be >= 0");
        total += p;
    }
    double norm = total.value();
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw ValidationError("joint pmf mass is not finite and positive");
    for (double& p : probs) p /= norm;

    JointPmf j;
    j.x_support_ = std::move(x_support);
    j.y_support_ = std::move(y_support);
    j.probs_ = std::move(probs);
    return j;
}

JointPmf JointPmf::product(const DiscretePmf& x, const DiscretePmf& y) {
    std::vector<double> probs(x.size() * y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            probs[i * y.size() + j] = x.probs()[i] * y.probs()[j];
    return from_matrix({x.support().begin(), x.support().end()},
                       {y.support().begin(), y.support().end()}, std::move(probs));
}

std::pair<DiscretePmf, double> JointPmf::conditional_slice(long long y) const {
    auto it = std::lower_bound(y_support_.begin(), y_support_.end(), y);
    if (it == y_support_.end() || *it != y)
        throw DegenerateConditionError("y value " + std::to_string(y) + " not in support");
    return conditional_slice_index(static_cast<std::size_t>(it - y_support_.begin()));
}

std::pair<DiscretePmf, double> JointPmf::conditional_slice_index(std::size_t j) const {
    CompensatedSum marginal;
    for (std::size_t i = 0; i < x_size(); ++i) marginal += prob(i, j);
    double m = marginal.value();
    if (!(m > 0.0))
        throw DegenerateConditionError("conditioning on zero-probability y");
    std::vector<std::pair<long long, double>> pts;
    pts.reserve(x_size());
    for (std::size_t i = 0; i < x_size(); ++i) pts.emplace_back(x_support_[i], prob(i, j));
    return {DiscretePmf::from_points(std::move(pts)), m};
}

DiscretePmf JointPmf::x_marginal() const {
    std::vector<std::pair<long long, double>> pts;
    for (std::size_t i = 0; i < x_size(); ++i) {
        CompensatedSum row;
        for (std::size_t j = 0; j < y_size(); ++j) row += prob(i, j);
        pts.emplace_back(x_support_[i], row.value());
    }
    return DiscretePmf::from_points(std::move(pts));
}

DiscretePmf JointPmf::y_marginal() const {
    std::vector<std::pair<long long, double>> pts;
    for (std::size_t j = 0; j < y_size(); ++j) {
        CompensatedSum col;
        for (std::size_t i = 0; i < x_size(); ++i) col += prob(i, j);
        pts.emplace_back(y_support_[j], col.value());
    }
    return DiscretePmf::from_points(std::move(pts));
}

FamilySpec FamilySpec::bernoulli(double p) {
    FamilySpec s;
    s.family = Family::bernoulli;
    s.p = p;
    return s;
}

FamilySpec FamilySpec::binomial(long long n, double p) {
    FamilySpec s;
    s.family = Family::binomial;
    s.n = n;
    s.p = p;
    return s;
}

FamilySpec FamilySpec::poisson(double lambda) {
    FamilySpec s;
    s.family = Family::poisson;
    s.lambda = lambda;
    return s;
}

FamilySpec FamilySpec::geometric(double mean) {
    FamilySpec s;
    s.family = Family::geometric;
    s.mean = mean;
    return s;
}

FamilySpec FamilySpec::zipf_log_power(double exponent, long long cutoff) {
    FamilySpec s;
    s.family = Family::zipf_log_power;
    s.exponent = exponent;
    s.cutoff = cutoff;
    return s;
}

FamilySpec FamilySpec::uniform(long long size) {
    FamilySpec s;
    s.family = Family::uniform;
    s.size = size;
    return s;
}

FamilySpec FamilySpec::custom(std::vector<std::pair<long long, double>> points) {
    FamilySpec s;
    s.family = Family::custom;
    s.points = std::move(points);
    return s;
}

namespace {

DiscretePmf build_poisson(double lambda) {
    if (!(lambda > 0.0)) throw ParameterError("poisson requires lambda > 0");
    const double log_lambda = std::log(lambda);
    std::vector<std::pair<long long, double>> pts;
    // Scan k upward; atoms that underflow to zero are dropped structurally.
    // Stop once the geometric domination bound on the remaining tail
    // p_k (r + r^2 + ...) with r = lambda/(k+1) certifies the mass target.
    const long long k_cap = static_cast<long long>(lambda + 60.0 * std::sqrt(lambda) + 200.0);
    double tail_bound = 1.0;
    for (long long k = 0; k <= k_cap; ++k) {
        double lp = -lambda + k * log_lambda - log_factorial(k);
        double p = std::exp(lp);
        pts.emplace_back(k, p);
        if (static_cast<double>(k) > lambda) {
            double r = lambda / (static_cast<double>(k) + 1.0);
            tail_bound = p * r / (1.0 - r);
            if (tail_bound < kTailThreshold) break;
        }
    }
    if (tail_bound >= kTailThreshold)
        throw AccuracyError("poisson truncation did not reach the mass target");
    return DiscretePmf::from_points(std::move(pts), tail_bound);
}

DiscretePmf build_geometric(double mean) {
    if (!(mean > 0.0)) throw ParameterError("geometric requires mean > 0");
    const double p = 1.0 / (1.0 + mean);
    const double log_q = std::log1p(-p);
    // Smallest K with q^{K+1} <= threshold.
    const long long kmax =
        static_cast<long long>(std::ceil(std::log(kTailThreshold) / log_q)) + 1;
    std::vector<std::pair<long long, double>> pts;
    CompensatedSum cum;
    long long k = 0;
    for (; k <= kmax; ++k) {
        double pk = p * std::exp(k * log_q);
        pts.emplace_back(k, pk);
        cum += pk;
        if (cum.value() >= 1.0 - kTailThreshold) break;
    }
    double tail = std::exp((static_cast<double>(k) + 1.0) * log_q);
    return DiscretePmf::from_points(std::move(pts), std::max(0.0, tail));
}

DiscretePmf build_binomial(long long n, double p) {
    if (n < 1) throw ParameterError("binomial requires n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("binomial requires 0 <= p <= 1");
    if (p == 0.0) return DiscretePmf::from_points({{0, 1.0}});
    if (p == 1.0) return DiscretePmf::from_points({{n, 1.0}});
    const double lp = std::log(p), lq = std::log1p(-p);
    std::vector<std::pair<long long, double>> pts;
    pts.reserve(static_cast<std::size_t>(n) + 1);
    for (long long k = 0; k <= n; ++k)
        pts.emplace_back(k, std::exp(log_binomial(n, k) + k * lp + (n - k) * lq));
    return DiscretePmf::from_points(std::move(pts));
}

DiscretePmf build_zipf_log_power(double s, long long cutoff) {
    if (!(s > 0.0)) throw ParameterError("zipf_log_power requires exponent > 0");
    if (cutoff < 3) throw ParameterError("zipf_log_power requires cutoff >= 3");
    std::vector<std::pair<long long, double>> pts;
    pts.reserve(static_cast<std::size_t>(cutoff) - 1);
    for (long long k = 2; k <= cutoff; ++k) {
        double kk = static_cast<double>(k);
        pts.emplace_back(k, std::pow(kk * std::log(kk), -s));
    }
    // Normalized over the explicit window only; the infinite-series constant
    // is never used (the family exists to demonstrate divergence).
    return DiscretePmf::from_points(std::move(pts));
}

}  // namespace

DiscretePmf build(const FamilySpec& spec) {
    switch (spec.family) {
        case FamilySpec::Family::bernoulli:
            if (!(spec.p >= 0.0 && spec.p <= 1.0))
                throw ParameterError("bernoulli requires 0 <= p <= 1");
            return DiscretePmf::from_points({{0, 1.0 - spec.p}, {1, spec.p}});
        case FamilySpec::Family::binomial:
            return build_binomial(spec.n, spec.p);
        case FamilySpec::Family::poisson:
            return build_poisson(spec.lambda);
        case FamilySpec::Family::geometric:
            return build_geometric(spec.mean);
        case FamilySpec::Family::zipf_log_power:
            return build_zipf_log_power(spec.exponent, spec.cutoff);
        case FamilySpec::Family::uniform: {
            if (spec.size < 1) throw ParameterError("uniform requires M >= 1");
            std::vector<std::pair<long long, double>> pts;
            for (long long k = 0; k < spec.size; ++k)
                pts.emplace_back(k, 1.0 / static_cast<double>(spec.size));
            return DiscretePmf::from_points(std::move(pts));
        }
        case FamilySpec::Family::custom:
            return DiscretePmf::from_points(spec.points);
    }
    throw ParameterError("unknown family");
}

DiscretePmf load_pmf_text(std::istream& in) {
    std::vector<std::pair<long long, double>> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ls(line);
        long long value;
        double prob;
        if (!(ls >> value >> prob))
            throw ValidationError("malformed pmf line " + std::to_string(lineno) +
                                  " (expected: value probability)");
        pts.emplace_back(value, prob);
    }
    if (pts.empty()) throw ValidationError("no pmf entries found");
    return DiscretePmf::from_points(std::move(pts));
}

DiscretePmf load_pmf_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    if (!j.is_array()) throw ValidationError("pmf JSON must be an array of [value, prob] pairs");
    std::vector<std::pair<long long, double>> pts;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw ValidationError("pmf JSON entries must be [value, prob] pairs");
        pts.emplace_back(e[0].get<long long>(), e[1].get<double>());
    }
    return DiscretePmf::from_points(std::move(pts));
}

DiscretePmf load_pmf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open pmf file: " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return load_pmf_json(in);
    return load_pmf_text(in);
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    return cells;
}

}  // namespace

JointPmf load_joint_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("empty joint csv");
    auto header = split_csv_row(line);
    if (header.size() < 2) throw ValidationError("joint csv header needs y values");
    std::vector<long long> ys;
    for (std::size_t j = 1; j < header.size(); ++j) ys.push_back(std::stoll(header[j]));

    std::vector<long long> xs;
    std::vector<double> probs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split_csv_row(line);
        if (cells.size() != header.size())
            throw ValidationError("joint csv row width mismatch");
        xs.push_back(std::stoll(cells[0]));
        for (std::size_t j = 1; j < cells.size(); ++j) probs.push_back(std::stod(cells[j]));
    }
    return JointPmf::from_matrix(std::move(xs), std::move(ys), std::move(probs));
}

JointPmf load_joint_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open joint csv file: " + path);
    return load_joint_csv(in);
}

}  // namespace massent
