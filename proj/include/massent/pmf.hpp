#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace massent {

/// Mass excluded when an infinite family is truncated.
inline constexpr double kTailThreshold = 1e-14;

/// Finite integer-supported probability mass function. Immutable after
/// construction; zero-probability atoms are dropped structurally so the
/// 0 log 0 = 0 convention never has to be applied arithmetically.
class DiscretePmf {
  public:
    /// Builds from (value, probability) points. Points are sorted, zero atoms
    /// dropped, probabilities renormalized. `tail_mass_bound` records mass
    /// excluded by truncation of an infinite family.
    static DiscretePmf from_points(std::vector<std::pair<long long, double>> points,
                                   double tail_mass_bound = 0.0);

    std::size_t size() const { return support_.size(); }
    std::span<const long long> support() const { return support_; }
    std::span<const double> probs() const { return probs_; }
    long long support_min() const { return support_.front(); }
    long long support_max() const { return support_.back(); }
    long long support_length() const { return support_.back() - support_.front(); }
    double tail_mass_bound() const { return tail_mass_bound_; }

    double mean() const;
    double variance() const;

    /// E|X - c|^rho with c = mean when centered, else c = 0. With one_sided
    /// set, the support must be nonnegative (moments of X itself).
    double moment(double rho, bool centered, bool one_sided = false) const;

    /// Same law with every support point shifted by c.
    DiscretePmf translated(long long c) const;

    bool equiprobable() const;

  private:
    DiscretePmf() = default;
    std::vector<long long> support_;
    std::vector<double> probs_;
    double tail_mass_bound_ = 0.0;
};

/// Finite joint distribution over (x, y) pairs, row-major in x.
class JointPmf {
  public:
    static JointPmf from_matrix(std::vector<long long> x_support,
                                std::vector<long long> y_support,
                                std::vector<double> probs);

    /// Independent coupling of two marginals.
    static JointPmf product(const DiscretePmf& x, const DiscretePmf& y);

    std::span<const long long> x_support() const { return x_support_; }
    std::span<const long long> y_support() const { return y_support_; }
    std::size_t x_size() const { return x_support_.size(); }
    std::size_t y_size() const { return y_support_.size(); }
    double prob(std::size_t i, std::size_t j) const { return probs_[i * y_support_.size() + j]; }

    /// Normalized conditional law of X given Y = y and the marginal P(Y = y).
    std::pair<DiscretePmf, double> conditional_slice(long long y) const;
    std::pair<DiscretePmf, double> conditional_slice_index(std::size_t j) const;

    DiscretePmf x_marginal() const;
    DiscretePmf y_marginal() const;

  private:
    JointPmf() = default;
    std::vector<long long> x_support_;
    std::vector<long long> y_support_;
    std::vector<double> probs_;
};

/// Parametric family selector for build().
struct FamilySpec {
    enum class Family {
        bernoulli,
        binomial,
        poisson,
        geometric,
        zipf_log_power,
        uniform,
        custom,
    };

    Family family = Family::custom;
    double p = 0.0;        // bernoulli / binomial success probability
    long long n = 0;       // binomial trial count
    double lambda = 0.0;   // poisson rate
    double mean = 0.0;     // geometric mean
    double exponent = 0.0; // zipf_log_power exponent s
    long long cutoff = 0;  // zipf_log_power support cutoff K
    long long size = 0;    // uniform alphabet size M
    std::vector<std::pair<long long, double>> points;  // custom

    static FamilySpec bernoulli(double p);
    static FamilySpec binomial(long long n, double p);
    static FamilySpec poisson(double lambda);
    static FamilySpec geometric(double mean);
    static FamilySpec zipf_log_power(double exponent, long long cutoff);
    static FamilySpec uniform(long long size);
    static FamilySpec custom(std::vector<std::pair<long long, double>> points);
};

/// Realizes the family as a finite pmf. Infinite supports are truncated at
/// the smallest point where the cumulative mass reaches 1 - kTailThreshold,
/// then renormalized; the excluded mass is recorded in tail_mass_bound.
DiscretePmf build(const FamilySpec& spec);

/// Text format: one "value probability" pair per line, '#' starts a comment.
DiscretePmf load_pmf_text(std::istream& in);
/// JSON array-of-pairs form: [[value, probability], ...].
DiscretePmf load_pmf_json(std::istream& in);
/// Dispatches on the ".json" extension, otherwise reads the text format.
DiscretePmf load_pmf_file(const std::string& path);

/// CSV with a header row of y values; each data row is an x value followed
/// by the joint probabilities.
JointPmf load_joint_csv(std::istream& in);
JointPmf load_joint_csv_file(const std::string& path);

}  // namespace massent
