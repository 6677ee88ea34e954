#include "massent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "massent/bounds.hpp"
#include "massent/errors.hpp"
#include "massent/guessing.hpp"
#include "massent/numeric.hpp"
#include "massent/poisson_sum.hpp"
#include "massent/quadrature.hpp"
#include "massent/special.hpp"

namespace massent {

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["checks_run"] = report.checks_run;
    j["passed"] = report.passed();
    auto violation_list = [](const std::vector<Violation>& vs) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& v : vs) {
            nlohmann::ordered_json e;
            e["bound"] = v.bound;
            e["input"] = v.input;
            e["subject"] = v.subject;
            e["bound_value"] = v.bound_value;
            arr.push_back(e);
        }
        return arr;
    };
    j["violations"] = violation_list(report.violations);
    j["boundary_warnings"] = violation_list(report.boundary_warnings);
    j["max_dither_discrepancy_bits"] = report.max_dither_discrepancy;
    j["max_poisson_discrepancy"] = report.max_poisson_discrepancy;
    nlohmann::ordered_json th = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.thresholds) th[k] = v;
    j["thresholds"] = th;
    return j;
}

std::string report_summary(const VerificationReport& report) {
    std::ostringstream os;
    os << "checks run:            " << report.checks_run << "\n";
    os << "violations:            " << report.violations.size() << "\n";
    os << "boundary warnings:     " << report.boundary_warnings.size() << "\n";
    os << "max dither discrepancy:  " << report.max_dither_discrepancy << " bits\n";
    os << "max poisson discrepancy: " << report.max_poisson_discrepancy << "\n";
    for (const auto& [k, v] : report.thresholds) os << k << " = " << v << "\n";
    for (const auto& v : report.violations)
        os << "VIOLATION " << v.bound << " on " << v.input << ": subject " << v.subject
           << " vs bound " << v.bound_value << "\n";
    os << (report.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

double dither_identity(const DiscretePmf& pmf, EntropyOrder order) {
    auto support = pmf.support();
    auto probs = pmf.probs();
    auto staircase = [&](double x) -> double {
        long long k = static_cast<long long>(std::floor(x));
        auto it = std::lower_bound(support.begin(), support.end(), k);
        if (it == support.end() || *it != k) return 0.0;
        return probs[static_cast<std::size_t>(it - support.begin())];
    };

    std::vector<double> edges;
    edges.reserve(2 * support.size());
    for (long long v : support) {
        edges.push_back(static_cast<double>(v));
        edges.push_back(static_cast<double>(v) + 1.0);
    }

    Interval box{static_cast<double>(pmf.support_min()),
                 static_cast<double>(pmf.support_max()) + 1.0};
    double h = quadrature_renyi(staircase, box, order, edges);
    return std::abs(h - discrete_entropy(pmf, order));
}

std::vector<std::pair<double, double>> reza_convergence(const MaxEntDensity& density,
                                                        EntropyOrder order,
                                                        std::span<const double> deltas) {
    Interval s = density.support();
    double lo = s.lo, hi = s.hi;
    // tail truncation for unbounded supports; the discarded mass is far below
    // the residual scale asserted by callers
    if (std::isinf(lo) || std::isinf(hi)) {
        switch (density.kind()) {
            case MaxEntDensity::Kind::gaussian:
                lo = density.mu() - 12.0 * density.sigma();
                hi = density.mu() + 12.0 * density.sigma();
                break;
            case MaxEntDensity::Kind::exponential:
                lo = 0.0;
                hi = 80.0 * density.mu();
                break;
            default:
                throw ValidationError(
                    "quantization requires compact support or exponential tails");
        }
    }

    std::vector<std::pair<double, double>> table;
    double h_ref = quadrature_renyi(density, order);

    for (double delta : deltas) {
        if (!(delta > 0.0)) throw ParameterError("quantization step must be > 0");
        long long bins = static_cast<long long>(std::ceil((hi - lo) / delta));
        quad::Options qo;
        qo.abs_tol = 1e-16;
        qo.rel_tol = 1e-12;
        qo.max_intervals = 200;

        std::vector<double> masses;
        masses.reserve(static_cast<std::size_t>(bins));
        for (long long k = 0; k < bins; ++k) {
            double a = lo + static_cast<double>(k) * delta;
            double b = std::min(a + delta, hi);
            auto r = quad::integrate([&density](double x) { return density(x); }, a, b, qo);
            if (r.value > 0.0) masses.push_back(r.value);
        }

        double h_q;
        if (order.is_shannon()) {
            CompensatedSum acc;
            for (double p : masses) acc += -p * std::log2(p);
            h_q = acc.value();
        } else {
            CompensatedSum acc;
            for (double p : masses) acc += std::pow(p, order.alpha());
            h_q = std::log2(acc.value()) / (1.0 - order.alpha());
        }
        table.emplace_back(delta, h_q + std::log2(delta) - h_ref);
    }
    return table;
}

bool trapezoid_check(double alpha, double mu) {
    if (!(mu > 0.0)) throw ParameterError("trapezoid_check requires mu > 0");
    if (!(alpha > 0.5)) throw ValidityError("trapezoid_check requires alpha > 1/2", 0.5);
    if (std::abs(alpha - 1.0) < kAlphaGuardBand)
        throw ValidityError("alpha within the guard band around 1", 1.0);

    const double target = mu + 0.5;
    if (alpha > 1.0) {
        double a = (alpha - 1.0) / ((2.0 * alpha - 1.0) * mu);
        double s = alpha / (alpha - 1.0);
        long long hi = static_cast<long long>(std::floor(1.0 / a));
        CompensatedSum acc;
        for (long long x = 0; x <= hi; ++x) {
            double w = 1.0 - a * static_cast<double>(x);
            if (w > 0.0) acc += std::pow(w, s);
        }
        return acc.value() > target;
    }

    const double a = (1.0 - alpha) / ((2.0 * alpha - 1.0) * mu);
    const double s = alpha / (1.0 - alpha);  // > 1
    CompensatedSum partial;
    long long x = 0;
    for (long long n = 64; n <= (1LL << 26); n *= 2) {
        for (; x < n; ++x) partial += std::pow(1.0 + a * static_cast<double>(x), -s);
        // remaining tail is at least its integral (terms of a decreasing f)
        double tail_lower =
            std::pow(1.0 + a * static_cast<double>(n), 1.0 - s) / (a * (s - 1.0));
        if (partial.value() + tail_lower > target) return true;
    }
    return false;
}

namespace {

double binomial_entropy_bits(long long n, double p) {
    const double lp = std::log(p), lq = std::log1p(-p);
    CompensatedSum acc;
    for (long long k = 0; k <= n; ++k) {
        double lpk = log_binomial(n, k) + static_cast<double>(k) * lp +
                     static_cast<double>(n - k) * lq;
        acc += -std::exp(lpk) * lpk;
    }
    return acc.value() * kLog2E;
}

bool binomial_gaussian_bound_holds(double d, long long n_max) {
    const double p = 0.5 - d;
    const double q = 1.0 - p;
    for (long long n = 1; n <= n_max; ++n) {
        double bound = 0.5 * std::log2(2.0 * kPi * kE * static_cast<double>(n) * p * q);
        if (!(binomial_entropy_bits(n, p) < bound)) return false;
    }
    return true;
}

}  // namespace

double find_threshold(ThresholdTarget target, const ThresholdOptions& opts) {
    switch (target) {
        case ThresholdTarget::poisson_lambda_star: {
            auto holds = [](double lambda) {
                double h = discrete_entropy(build(FamilySpec::poisson(lambda)),
                                            EntropyOrder::shannon());
                return h < 0.5 * std::log2(2.0 * kPi * kE * lambda);
            };
            double lo = 0.05, hi = 0.5;
            if (holds(lo) || !holds(hi))
                throw AccuracyError("poisson threshold predicate does not bracket");
            while (hi - lo > opts.tolerance * 0.5) {
                double mid = 0.5 * (lo + hi);
                (holds(mid) ? hi : lo) = mid;
            }
            return 0.5 * (lo + hi);
        }
        case ThresholdTarget::binomial_p_star: {
            double lo = 0.28, hi = 0.33;  // largest d with the bound holding for all n
            if (!binomial_gaussian_bound_holds(lo, opts.binomial_n_max) ||
                binomial_gaussian_bound_holds(hi, opts.binomial_n_max))
                throw AccuracyError("binomial threshold predicate does not bracket");
            while (hi - lo > opts.tolerance * 0.5) {
                double mid = 0.5 * (lo + hi);
                (binomial_gaussian_bound_holds(mid, opts.binomial_n_max) ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        case ThresholdTarget::massey_crossover: {
            auto diff = [](double h) {
                return std::exp2(h) / kE + 0.5 - (std::exp2(h - 2.0) + 1.0);
            };
            double lo = 2.0, hi = 2.5;
            if (!(diff(lo) < 0.0 && diff(hi) > 0.0))
                throw AccuracyError("crossover predicate does not bracket");
            while (hi - lo > opts.tolerance * 0.5) {
                double mid = 0.5 * (lo + hi);
                (diff(mid) > 0.0 ? hi : lo) = mid;
            }
            return 0.5 * (lo + hi);
        }
    }
    throw ParameterError("unknown threshold target");
}

std::vector<DivergenceRow> divergence_demo(int exponent, long long cutoff) {
    if (exponent != 2 && exponent != 3)
        throw ParameterError("divergence_demo supports exponents 2 and 3");
    if (cutoff < 10) throw ParameterError("divergence_demo requires cutoff >= 10");

    std::vector<long long> marks;
    for (long long m = 10; m < cutoff; m *= 10) marks.push_back(m);
    marks.push_back(cutoff);

    std::vector<DivergenceRow> rows;
    CompensatedSum moment, renyi;
    std::size_t next = 0;
    for (long long k = 2; k <= cutoff; ++k) {
        double lk = std::log(static_cast<double>(k));
        // weight w = (k log k)^{-s}: moment term k^{s-1} w = 1/(k log^s k),
        // and w^{1/s} = 1/(k log k)
        moment += 1.0 / (static_cast<double>(k) * std::pow(lk, exponent));
        renyi += 1.0 / (static_cast<double>(k) * lk);
        while (next < marks.size() && k == marks[next]) {
            rows.push_back({k, moment.value(), renyi.value()});
            ++next;
        }
    }
    return rows;
}

namespace {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 eng_;
};

DiscretePmf random_pmf(Rng& rng, int atoms, bool heavy_tail) {
    std::vector<std::pair<long long, double>> pts;
    pts.reserve(static_cast<std::size_t>(atoms));
    double scale = heavy_tail ? 10.0 : 1.0;
    for (int i = 0; i < atoms; ++i)
        pts.emplace_back(i, std::exp(scale * rng.uniform01()));
    return DiscretePmf::from_points(std::move(pts));
}

JointPmf random_joint(Rng& rng, int rows, int cols) {
    std::vector<long long> xs(rows), ys(cols);
    for (int i = 0; i < rows; ++i) xs[i] = i;
    for (int j = 0; j < cols; ++j) ys[j] = j;
    std::vector<double> probs(static_cast<std::size_t>(rows) * cols);
    for (double& p : probs) p = std::exp(3.0 * rng.uniform01());
    return JointPmf::from_matrix(std::move(xs), std::move(ys), std::move(probs));
}

struct Checker {
    const SweepConfig& cfg;
    VerificationReport& rep;

    // subject must stay below the bound (entropy upper bounds)
    void upper(const std::string& bound, const std::string& input, double subject,
               double bound_value, bool strict) {
        record(bound, input, subject, bound_value, bound_value - subject, strict);
    }
    // subject must stay above the bound (guessing lower bounds)
    void lower(const std::string& bound, const std::string& input, double subject,
               double bound_value, bool strict) {
        record(bound, input, subject, bound_value, subject - bound_value, strict);
    }

  private:
    void record(const std::string& bound, const std::string& input, double subject,
                double bound_value, double margin, bool strict) {
        ++rep.checks_run;
        if (margin <= -cfg.strict_slack)
            rep.violations.push_back({bound, input, subject, bound_value});
        else if (strict && margin <= 0.0)
            rep.boundary_warnings.push_back({bound, input, subject, bound_value});
    }
};

std::vector<std::pair<std::string, EntropyOrder>> sweep_orders(const SweepConfig& cfg) {
    std::vector<std::pair<std::string, EntropyOrder>> orders;
    for (double a : cfg.alphas) {
        if (a == 1.0)
            orders.emplace_back("shannon", EntropyOrder::shannon());
        else
            orders.emplace_back(EntropyOrder::renyi(a).label(), EntropyOrder::renyi(a));
    }
    return orders;
}

void check_pmf(Checker& chk, const std::string& name, const DiscretePmf& pmf,
               const std::vector<std::pair<std::string, EntropyOrder>>& orders,
               const std::vector<double>& rhos) {
    const double mu = pmf.mean();
    const double sigma2 = pmf.variance();
    const bool nonneg = pmf.support_min() >= 0;
    const auto support = SupportSpec::of(pmf);

    double h_shannon = discrete_entropy(pmf, EntropyOrder::shannon());

    for (const auto& [olabel, order] : orders) {
        double h = discrete_entropy(pmf, order);
        std::string input = name + " / " + olabel;

        chk.upper("support_bound", input, h, support_bound(pmf.support_length()).bound_bits,
                  false);

        if (sigma2 > 0.0) {
            bool adm = order.is_shannon() || order.alpha() > 1.0 / 3.0;
            if (adm) {
                chk.upper("massey_variance", input, h,
                          massey_variance(sigma2, order).bound_bits, true);
                chk.upper("mixed_variance", input, h,
                          mixed_variance(support, mu, sigma2, order).bound_bits, false);
            }
        }
        if (nonneg && mu > 0.0) {
            bool adm = order.is_shannon() || order.alpha() > 0.5;
            if (adm) {
                chk.upper("mean_bound", input, h, mean_bound(mu, order).bound_bits, true);
                chk.upper("mixed_mean", input, h,
                          mixed_mean(mu, order, support).bound_bits, false);
            }
        }
    }

    if (sigma2 > 0.0) {
        chk.upper("improved_variance", name + " / shannon", h_shannon,
                  improved_variance(sigma2, EntropyOrder::shannon()).bound_bits, true);
        chk.upper("improved_variance", name + " / renyi(0.5)",
                  discrete_entropy(pmf, EntropyOrder::renyi(0.5)),
                  improved_variance(sigma2, EntropyOrder::renyi(0.5)).bound_bits, true);
        chk.upper("improved_variance", name + " / renyi(2/3)",
                  discrete_entropy(pmf, EntropyOrder::renyi(2.0 / 3.0)),
                  improved_variance(sigma2, EntropyOrder::renyi(2.0 / 3.0)).bound_bits, true);

        if (nonneg) {
            BoundReport gc = gaussian_condition(mu, sigma2);
            bool sufficient = std::all_of(gc.validity.begin(), gc.validity.end(),
                                          [](const ValidityCheck& v) { return v.satisfied; });
            if (sufficient)
                chk.upper("gaussian_condition", name + " / shannon", h_shannon, gc.bound_bits,
                          true);
        }
    }

    // guessing quantities and their lower bounds
    GuessingProfile profile = guessing_profile(pmf);
    const double g = profile.G;
    const long long m = static_cast<long long>(pmf.size());

    chk.upper("guessing_mean_cap", name, g,
              0.5 * (static_cast<double>(m) + 1.0) + 1e-12, false);

    if (auto massey = lb_massey_original(h_shannon))
        chk.lower("lb_massey_original", name, g, *massey, false);
    chk.lower("lb_improved", name, g, lb_improved(h_shannon), true);
    chk.lower("lb_arikan_original", name, g,
              lb_arikan(discrete_entropy(pmf, EntropyOrder::renyi(0.5)), m,
                        ArikanVariant::original),
              false);
    chk.lower("lb_arikan_improved", name, g,
              lb_arikan(discrete_entropy(pmf, EntropyOrder::renyi(0.5)), m,
                        ArikanVariant::improved),
              true);

    for (const auto& [olabel, order] : orders) {
        if (order.is_shannon()) continue;
        double a = order.alpha();
        double h = discrete_entropy(pmf, order);
        std::string input = name + " / " + olabel;
        if (a > 0.5) chk.lower("lb_renyi", input, g, lb_renyi(h, a), true);
        if (a < 0.5) chk.lower("lb_small_alpha", input, g, lb_small_alpha(h, a, m), true);
        if (a > 0.5 && a < 1.0) chk.lower("lb_mid_alpha", input, g, lb_mid_alpha(h, a), true);
    }

    for (double rho : rhos) {
        double grho = profile.moment(rho);
        chk.lower("lb_moment", name + " / rho=" + std::to_string(rho), grho,
                  lb_moment(h_shannon, rho), true);
        for (const auto& [olabel, order] : orders) {
            if (order.is_shannon()) continue;
            double a = order.alpha();
            if (!(a > 1.0 / (1.0 + rho))) continue;
            chk.lower("lb_moment_renyi", name + " / rho=" + std::to_string(rho) + " / " + olabel,
                      grho, lb_moment_renyi(discrete_entropy(pmf, order), a, rho), true);
        }
    }
}

void check_joint(Checker& chk, const std::string& name, const JointPmf& joint,
                 const std::vector<std::pair<std::string, EntropyOrder>>& orders,
                 const std::vector<double>& rhos) {
    const long long m = static_cast<long long>(joint.x_size());
    const DiscretePmf marginal = joint.x_marginal();
    const double g_cond = conditional_guessing(joint, 1.0);
    const double h_cond_shannon = conditional_entropy(joint, EntropyOrder::shannon());

    // conditioning cannot increase Arimoto entropy
    for (const auto& [olabel, order] : orders) {
        double h_cond = conditional_entropy(joint, order);
        chk.upper("arimoto_conditioning", name + " / " + olabel, h_cond,
                  discrete_entropy(marginal, order) + 1e-12, false);
    }

    if (auto massey = lb_massey_original(h_cond_shannon))
        chk.lower("lb_massey_original|Y", name, g_cond, *massey, false);
    chk.lower("lb_improved|Y", name, g_cond, lb_improved(h_cond_shannon), true);

    double h_half = conditional_entropy(joint, EntropyOrder::renyi(0.5));
    chk.lower("lb_arikan_original|Y", name, g_cond,
              lb_arikan(h_half, m, ArikanVariant::original), false);
    chk.lower("lb_arikan_improved|Y", name, g_cond,
              lb_arikan(h_half, m, ArikanVariant::improved), true);

    for (const auto& [olabel, order] : orders) {
        if (order.is_shannon()) continue;
        double a = order.alpha();
        double h = conditional_entropy(joint, order);
        std::string input = name + " / " + olabel;
        if (a > 0.5) chk.lower("lb_renyi|Y", input, g_cond, lb_renyi(h, a), true);
        if (a < 0.5) chk.lower("lb_small_alpha|Y", input, g_cond, lb_small_alpha(h, a, m), true);
    }

    for (double rho : rhos) {
        double grho = conditional_guessing(joint, rho);
        chk.lower("lb_moment|Y", name + " / rho=" + std::to_string(rho), grho,
                  lb_moment(h_cond_shannon, rho), true);
        for (const auto& [olabel, order] : orders) {
            if (order.is_shannon()) continue;
            double a = order.alpha();
            if (!(a > 1.0 / (1.0 + rho))) continue;
            chk.lower("lb_moment_renyi|Y",
                      name + " / rho=" + std::to_string(rho) + " / " + olabel, grho,
                      lb_moment_renyi(conditional_entropy(joint, order), a, rho), true);
        }
    }
}

}  // namespace

VerificationReport full_sweep(const SweepConfig& cfg) {
    VerificationReport rep;
    Checker chk{cfg, rep};
    const auto orders = sweep_orders(cfg);

    std::vector<std::pair<std::string, DiscretePmf>> pmfs;
    for (double p : cfg.bernoulli_p)
        pmfs.emplace_back("bernoulli(p=" + std::to_string(p) + ")",
                          build(FamilySpec::bernoulli(p)));
    for (auto [n, p] : cfg.binomial)
        pmfs.emplace_back(
            "binomial(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")",
            build(FamilySpec::binomial(n, p)));
    for (double l : cfg.poisson_lambda)
        pmfs.emplace_back("poisson(lambda=" + std::to_string(l) + ")",
                          build(FamilySpec::poisson(l)));
    for (double mu : cfg.geometric_mean)
        pmfs.emplace_back("geometric(mean=" + std::to_string(mu) + ")",
                          build(FamilySpec::geometric(mu)));
    for (long long m : cfg.uniform_sizes)
        pmfs.emplace_back("uniform(M=" + std::to_string(m) + ")",
                          build(FamilySpec::uniform(m)));

    Rng rng(cfg.seed);
    for (int i = 0; i < cfg.random_pmfs; ++i)
        pmfs.emplace_back("random_pmf#" + std::to_string(i),
                          random_pmf(rng, cfg.random_pmf_atoms, i % 2 == 1));

    // a numerical failure inside one check is recorded against that input,
    // never fatal to the rest of the sweep
    for (const auto& [name, pmf] : pmfs) {
        try {
            check_pmf(chk, name, pmf, orders, cfg.rhos);
        } catch (const Error& e) {
            rep.violations.push_back({std::string("internal_error: ") + e.what(), name, 0, 0});
        }
    }

    for (int i = 0; i < cfg.random_joints; ++i) {
        JointPmf joint = random_joint(rng, cfg.joint_rows, cfg.joint_cols);
        std::string name = "random_joint#" + std::to_string(i);
        try {
            check_joint(chk, name, joint, orders, cfg.rhos);
        } catch (const Error& e) {
            rep.violations.push_back({std::string("internal_error: ") + e.what(), name, 0, 0});
        }
    }

    // dither identity over the first pmfs of the list
    const EntropyOrder dither_orders[] = {EntropyOrder::shannon(), EntropyOrder::renyi(0.5),
                                          EntropyOrder::renyi(2.0), EntropyOrder::renyi(3.0)};
    int dithered = 0;
    for (const auto& [name, pmf] : pmfs) {
        if (dithered >= cfg.dither_pmf_count) break;
        if (pmf.size() == 1) continue;  // point mass staircase is a unit box
        for (const auto& order : dither_orders) {
            ++rep.checks_run;
            try {
                double disc = dither_identity(pmf, order);
                rep.max_dither_discrepancy = std::max(rep.max_dither_discrepancy, disc);
                if (disc > cfg.dither_tolerance)
                    rep.violations.push_back({"dither_identity", name + " / " + order.label(),
                                              disc, cfg.dither_tolerance});
            } catch (const Error& e) {
                rep.violations.push_back({std::string("internal_error: ") + e.what(),
                                          name + " / " + order.label(), 0, 0});
            }
        }
        ++dithered;
    }

    // Poisson summation identity over a (mu, sigma) grid
    const double mus[] = {0.0, 0.25, 0.5, 0.77, 1.3};
    const double sigmas[] = {0.3, 0.4, 0.55, 0.7, 0.9, 1.2, 1.8, 2.6, 4.0, 6.5};
    int grid_used = 0;
    for (double mu : mus) {
        for (double sigma : sigmas) {
            if (grid_used >= cfg.poisson_grid_points) break;
            ++grid_used;
            FourierPair pairs[] = {FourierPair::gauss(mu, sigma),
                                   FourierPair::two_sided_exponential(sigma),
                                   FourierPair::cauchy_half(mu, sigma),
                                   FourierPair::sq_cauchy_two_thirds(mu, sigma)};
            for (const auto& pair : pairs) {
                LatticeSumResult r = lattice_sum(pair);
                rep.max_poisson_discrepancy =
                    std::max(rep.max_poisson_discrepancy, r.discrepancy);
                ++rep.checks_run;
                if (r.discrepancy > cfg.poisson_tolerance)
                    rep.violations.push_back(
                        {"poisson_identity", pair.label(), r.discrepancy, cfg.poisson_tolerance});
            }
        }
    }

    if (cfg.find_thresholds) {
        rep.thresholds["poisson_lambda_star"] =
            find_threshold(ThresholdTarget::poisson_lambda_star);
        rep.thresholds["binomial_p_star"] = find_threshold(ThresholdTarget::binomial_p_star);
        rep.thresholds["massey_crossover"] = find_threshold(ThresholdTarget::massey_crossover);
    }

    return rep;
}

}  // namespace massent
