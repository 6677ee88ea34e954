#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "massent/entropy.hpp"
#include "massent/maxent.hpp"
#include "massent/pmf.hpp"

namespace massent {

/// Grids and tolerances for the global inequality sweep.
struct SweepConfig {
    std::vector<double> bernoulli_p = {0.02, 0.11, 0.25, 0.5, 0.8, 0.97};
    std::vector<std::pair<long long, double>> binomial = {
        {4, 0.5}, {10, 0.3}, {16, 0.5}, {40, 0.7}, {100, 0.15}};
    std::vector<double> poisson_lambda = {0.2, 0.5, 1.0, 2.0, 4.0, 10.0, 50.0};
    std::vector<double> geometric_mean = {0.3, 1.0, 2.0, 5.0, 20.0};
    std::vector<long long> uniform_sizes = {1, 2, 6, 8, 64, 256};

    /// Orders; 1.0 stands for shannon.
    std::vector<double> alphas = {0.34, 0.4, 0.5, 0.6, 2.0 / 3.0, 0.75, 1.0, 2.0, 3.0, 4.0};
    std::vector<double> rhos = {1.0, 2.0, 3.0, 4.0};

    int random_pmfs = 1000;
    int random_pmf_atoms = 64;
    int random_joints = 200;
    int joint_rows = 8;
    int joint_cols = 8;
    std::uint64_t seed = 20240101;

    /// Floating-point slack for strict inequalities.
    double strict_slack = 1e-10;

    int dither_pmf_count = 20;
    double dither_tolerance = 1e-8;
    int poisson_grid_points = 50;
    double poisson_tolerance = 1e-10;

    bool find_thresholds = false;
};

struct Violation {
    std::string bound;
    std::string input;
    double subject = 0.0;
    double bound_value = 0.0;
};

struct VerificationReport {
    long long checks_run = 0;
    std::vector<Violation> violations;
    std::vector<Violation> boundary_warnings;
    double max_dither_discrepancy = 0.0;
    double max_poisson_discrepancy = 0.0;
    std::map<std::string, double> thresholds;

    bool passed() const { return violations.empty(); }
};

nlohmann::ordered_json report_to_json(const VerificationReport& report);
std::string report_summary(const VerificationReport& report);

/// |h_alpha(X + U) - H_alpha(X)| in bits, with U uniform on (0, 1): the
/// dithered variable has a staircase density whose entropy is evaluated by
/// the quadrature oracle and compared against the exact discrete entropy.
double dither_identity(const DiscretePmf& pmf, EntropyOrder order);

/// Mean-value quantization residuals H_alpha(X_Delta) + log2 Delta - h_alpha
/// for each step size; they shrink toward zero as Delta -> 0.
std::vector<std::pair<double, double>> reza_convergence(const MaxEntDensity& density,
                                                        EntropyOrder order,
                                                        std::span<const double> deltas);

/// Certifies sum_{x in N} (1 + (1-a)/(2a-1) x/mu)_+^{a/(a-1)} > mu + 1/2
/// for alpha > 1/2 (the lattice sum strictly exceeds the trapezoid area).
bool trapezoid_check(double alpha, double mu);

enum class ThresholdTarget { poisson_lambda_star, binomial_p_star, massey_crossover };

struct ThresholdOptions {
    double tolerance = 1e-7;
    long long binomial_n_max = 2000;  // finite-n approximation of "for all n"
};

/// Bisection for the numerical thresholds quoted alongside the bounds:
/// the smallest Poisson rate obeying the pure-Gaussian bound, the largest
/// |p - 1/2| for which every binomial with n <= n_max obeys it, and the
/// entropy where the improved Massey guessing bound overtakes the original.
double find_threshold(ThresholdTarget target, const ThresholdOptions& opts = {});

struct DivergenceRow {
    long long cutoff = 0;
    double moment_partial = 0.0;  // converging moment series
    double renyi_partial = 0.0;   // diverging sum of p^(1/exponent)
};

/// Partial sums for the heavy-tail counterexample weights 1/(k log k)^s,
/// s in {2, 3}: the moment series converges while the Renyi sum grows
/// without bound (like log log K).
std::vector<DivergenceRow> divergence_demo(int exponent, long long cutoff);

/// Runs every admissible (bound, input) pair over the family grids plus
/// seeded random pmfs and joints; all module invariants are asserted here.
VerificationReport full_sweep(const SweepConfig& config);

}  // namespace massent
