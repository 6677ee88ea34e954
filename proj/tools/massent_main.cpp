// Command-line front end: entropies, bounds, guessing quantities, the
// verification sweep and figure data, over the distribution mini-language
// "family:key=value,..." or pmf/joint files.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "massent/bounds.hpp"
#include "massent/entropy.hpp"
#include "massent/errors.hpp"
#include "massent/guessing.hpp"
#include "massent/numeric.hpp"
#include "massent/pmf.hpp"
#include "massent/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAccuracy = 3;

struct UsageError : massent::Error {
    using Error::Error;
};

bool g_full_precision = false;

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(g_full_precision ? 17 : 12) << x;
    return os.str();
}

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    const char* dir = std::getenv("MASSENT_OUTPUT_DIR");
    if (dir && *dir && p.is_relative()) return std::filesystem::path(dir) / p;
    return p;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

massent::FamilySpec parse_dist_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string family = spec.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);

    auto params = [&args]() {
        std::map<std::string, double> kv;
        for (const auto& item : split(args, ',')) {
            if (item.empty()) continue;
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw UsageError("malformed parameter '" + item + "' (expected key=value)");
            kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        }
        return kv;
    };

    auto need = [](const std::map<std::string, double>& kv,
                   std::initializer_list<const char*> names) -> double {
        for (const char* n : names) {
            auto it = kv.find(n);
            if (it != kv.end()) return it->second;
        }
        throw UsageError(std::string("missing parameter '") + *names.begin() + "'");
    };

    using massent::FamilySpec;
    if (family == "bernoulli") return FamilySpec::bernoulli(need(params(), {"p"}));
    if (family == "binomial") {
        auto kv = params();
        return FamilySpec::binomial(static_cast<long long>(need(kv, {"n"})), need(kv, {"p"}));
    }
    if (family == "poisson") return FamilySpec::poisson(need(params(), {"lambda"}));
    if (family == "geometric") return FamilySpec::geometric(need(params(), {"mean", "mu"}));
    if (family == "zipf_log_power") {
        auto kv = params();
        return FamilySpec::zipf_log_power(need(kv, {"s"}),
                                          static_cast<long long>(need(kv, {"K", "cutoff"})));
    }
    if (family == "uniform")
        return FamilySpec::uniform(static_cast<long long>(need(params(), {"M"})));
    if (family == "custom") {
        std::vector<std::pair<long long, double>> pts;
        for (const auto& item : split(args, ',')) {
            if (item.empty()) continue;
            auto c = item.find(':');
            if (c == std::string::npos)
                throw UsageError("custom pmf entries look like value:prob");
            pts.emplace_back(std::stoll(item.substr(0, c)), std::stod(item.substr(c + 1)));
        }
        return FamilySpec::custom(std::move(pts));
    }
    throw UsageError("unknown family '" + family +
                     "' (bernoulli, binomial, poisson, geometric, zipf_log_power, uniform, "
                     "custom)");
}

std::vector<double> parse_double_list(const std::string& list) {
    std::vector<double> values;
    for (const auto& item : split(list, ','))
        if (!item.empty()) values.push_back(std::stod(item));
    return values;
}

std::optional<massent::EntropyOrder> order_for(double alpha) {
    if (alpha == 1.0) return massent::EntropyOrder::shannon();
    try {
        return massent::EntropyOrder::renyi(alpha);
    } catch (const massent::ValidityError&) {
        return std::nullopt;
    }
}

std::string order_name(double alpha) {
    return alpha == 1.0 ? "shannon" : "renyi(" + fmt(alpha) + ")";
}

void emit_json(const ordered_json& record, const std::string& path) {
    if (path.empty()) return;
    if (path == "-") {
        std::cout << record.dump(2) << "\n";
        return;
    }
    std::ofstream out(resolve_output(path));
    if (!out) throw UsageError("cannot open output path: " + path);
    out << record.dump(2) << "\n";
}

ordered_json bound_report_json(const massent::BoundReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["formula"] = r.formula;
    j["bound_bits"] = r.bound_bits;
    if (r.subject_bits) j["subject_bits"] = *r.subject_bits;
    if (r.holds) j["holds"] = *r.holds;
    if (r.gap_bits) j["gap_bits"] = *r.gap_bits;
    j["strict"] = r.strict;
    ordered_json checks = ordered_json::array();
    for (const auto& v : r.validity) {
        ordered_json c;
        c["condition"] = v.condition;
        c["satisfied"] = v.satisfied;
        checks.push_back(c);
    }
    j["validity"] = checks;
    return j;
}

void print_report_line(const massent::BoundReport& r) {
    std::cout << "  " << std::left << std::setw(22) << r.name
              << " bound = " << fmt(r.bound_bits) << " bits";
    if (r.gap_bits) std::cout << "  gap = " << fmt(*r.gap_bits);
    if (r.holds) std::cout << (*r.holds ? "  [holds]" : "  [VIOLATED]");
    std::cout << "\n";
}

// ---------------------------------------------------------------- entropy

int cmd_entropy(const std::string& dist, const std::string& pmf_file,
                const std::string& alpha_list, const std::string& json_path) {
    massent::DiscretePmf pmf = pmf_file.empty() ? massent::build(parse_dist_spec(dist))
                                                : massent::load_pmf_file(pmf_file);
    std::vector<double> alphas = alpha_list.empty() ? std::vector<double>{1.0}
                                                    : parse_double_list(alpha_list);

    ordered_json record;
    record["format_version"] = 1;
    record["command"] = "entropy";
    record["inputs"]["dist"] = pmf_file.empty() ? dist : pmf_file;
    ordered_json results = ordered_json::object();

    for (double a : alphas) {
        std::string name = order_name(a);
        auto order = order_for(a);
        if (!order) {
            std::cout << name << ": inadmissible order (alpha must be > 0, away from 1)\n";
            results[name] = nullptr;
            continue;
        }
        double h = massent::discrete_entropy(pmf, *order);
        std::cout << "H[" << name << "] = " << fmt(h) << " bits\n";
        results[name] = h;
    }
    record["results"]["entropies_bits"] = results;
    emit_json(record, json_path);
    return kExitOk;
}

// ----------------------------------------------------------------- bounds

const std::vector<std::string> kBoundCatalog = {
    "massey_variance", "mean_bound",  "support_bound",     "improved_variance",
    "mixed_variance",  "mixed_mean",  "gaussian_condition"};

int cmd_bounds(const std::string& dist, const std::string& pmf_file, double sigma2_opt,
               double mu_opt, const std::string& bound_list, const std::string& alpha_list,
               const std::string& json_path) {
    std::optional<massent::DiscretePmf> pmf;
    if (!dist.empty()) pmf = massent::build(parse_dist_spec(dist));
    if (!pmf_file.empty()) pmf = massent::load_pmf_file(pmf_file);

    double mu = pmf ? pmf->mean() : mu_opt;
    double sigma2 = pmf ? pmf->variance() : sigma2_opt;
    bool have_sigma2 = pmf ? sigma2 > 0.0 : sigma2_opt > 0.0;
    bool have_mu = pmf ? (pmf->support_min() >= 0 && mu > 0.0) : mu_opt > 0.0;

    std::vector<std::string> names =
        bound_list == "all" ? kBoundCatalog : split(bound_list, ',');
    for (const auto& n : names) {
        if (std::find(kBoundCatalog.begin(), kBoundCatalog.end(), n) == kBoundCatalog.end()) {
            std::ostringstream os;
            os << "unknown bound '" << n << "'; catalog:";
            for (const auto& k : kBoundCatalog) os << " " << k;
            throw UsageError(os.str());
        }
    }

    std::vector<double> alphas = alpha_list.empty() ? std::vector<double>{1.0}
                                                    : parse_double_list(alpha_list);

    ordered_json record;
    record["format_version"] = 1;
    record["command"] = "bounds";
    record["inputs"]["dist"] = !pmf_file.empty() ? pmf_file : dist;
    if (!pmf) {
        if (have_sigma2) record["inputs"]["sigma2"] = sigma2;
        if (have_mu) record["inputs"]["mu"] = mu;
    }
    ordered_json reports = ordered_json::array();

    auto support = pmf ? massent::SupportSpec::of(*pmf) : massent::SupportSpec::integers();

    for (double a : alphas) {
        auto order = order_for(a);
        std::string oname = order_name(a);
        std::cout << oname << ":\n";
        if (!order) {
            std::cout << "  inadmissible order\n";
            continue;
        }
        std::optional<double> subject;
        if (pmf) subject = massent::discrete_entropy(*pmf, *order);

        for (const auto& name : names) {
            try {
                std::optional<massent::BoundReport> r;
                if (name == "massey_variance" && have_sigma2)
                    r = massent::massey_variance(sigma2, *order);
                else if (name == "mean_bound" && have_mu)
                    r = massent::mean_bound(mu, *order);
                else if (name == "support_bound" && pmf)
                    r = massent::support_bound(pmf->support_length());
                else if (name == "improved_variance" && have_sigma2)
                    r = massent::improved_variance(sigma2, *order);
                else if (name == "mixed_variance" && have_sigma2 && (pmf || have_mu))
                    r = massent::mixed_variance(support, mu, sigma2, *order);
                else if (name == "mixed_mean" && have_mu)
                    r = massent::mixed_mean(mu, *order,
                                            pmf ? support : massent::SupportSpec::integers());
                else if (name == "gaussian_condition" && have_sigma2 && order->is_shannon() &&
                         (!pmf || pmf->support_min() >= 0))
                    r = massent::gaussian_condition(std::max(mu, 0.0), sigma2);
                if (!r) continue;
                if (subject) r->against(*subject);
                print_report_line(*r);
                ordered_json rj = bound_report_json(*r);
                rj["order"] = oname;
                reports.push_back(rj);
            } catch (const massent::ValidityError& e) {
                std::cout << "  " << std::left << std::setw(22) << name
                          << " inadmissible: " << e.what() << " (threshold "
                          << fmt(e.threshold()) << ")\n";
            } catch (const massent::UnsupportedVariantError&) {
                // bound not defined at this order
            }
        }
        if (subject) std::cout << "  subject entropy = " << fmt(*subject) << " bits\n";
    }

    record["results"]["reports"] = reports;
    emit_json(record, json_path);
    return kExitOk;
}

// ------------------------------------------------------------------ guess

int cmd_guess(const std::string& dist, const std::string& pmf_file,
              const std::string& joint_file, const std::string& rho_list,
              const std::string& alpha_list, const std::string& json_path) {
    std::vector<double> rhos = rho_list.empty() ? std::vector<double>{1.0}
                                                : parse_double_list(rho_list);
    std::vector<double> alphas = alpha_list.empty()
                                     ? std::vector<double>{0.5, 2.0 / 3.0, 1.0, 2.0}
                                     : parse_double_list(alpha_list);

    ordered_json record;
    record["format_version"] = 1;
    record["command"] = "guess";
    ordered_json results;

    auto emit_bounds = [&](double g, double h_shannon, double h_half,
                           const std::function<double(double)>& renyi_entropy, long long m,
                           const std::function<double(double)>& moment) {
        ordered_json out;
        out["G"] = g;
        std::cout << "G = " << fmt(g) << "\n";

        ordered_json lbs = ordered_json::object();
        if (auto orig = massent::lb_massey_original(h_shannon)) {
            lbs["massey_original"] = *orig;
            std::cout << "  lb massey_original  = " << fmt(*orig)
                      << "  gap = " << fmt(g - *orig) << "\n";
        }
        double imp = massent::lb_improved(h_shannon);
        lbs["improved"] = imp;
        std::cout << "  lb improved         = " << fmt(imp) << "  gap = " << fmt(g - imp)
                  << "\n";
        for (auto variant :
             {massent::ArikanVariant::original, massent::ArikanVariant::improved}) {
            double b = massent::lb_arikan(h_half, m, variant);
            std::string name = variant == massent::ArikanVariant::original
                                   ? "arikan_original"
                                   : "arikan_improved";
            lbs[name] = b;
            std::cout << "  lb " << std::left << std::setw(16) << name << " = " << fmt(b)
                      << "  gap = " << fmt(g - b) << "\n";
        }
        for (double a : alphas) {
            if (a == 1.0) continue;
            try {
                double h = renyi_entropy(a);
                if (a > 0.5) {
                    double b = massent::lb_renyi(h, a);
                    lbs["renyi(" + fmt(a) + ")"] = b;
                    std::cout << "  lb renyi(" << fmt(a) << ") = " << fmt(b)
                              << "  gap = " << fmt(g - b) << "\n";
                } else if (a < 0.5) {
                    double b = massent::lb_small_alpha(h, a, m);
                    lbs["small_alpha(" + fmt(a) + ")"] = b;
                    std::cout << "  lb small_alpha(" << fmt(a) << ") = " << fmt(b)
                              << "  gap = " << fmt(g - b) << "\n";
                }
            } catch (const massent::ValidityError&) {
            }
        }
        ordered_json moments = ordered_json::object();
        for (double rho : rhos) {
            if (rho == 1.0) continue;
            double grho = moment(rho);
            ordered_json mj;
            mj["G_rho"] = grho;
            mj["lb_moment"] = massent::lb_moment(h_shannon, rho);
            std::cout << "G_" << fmt(rho) << " = " << fmt(grho)
                      << "  lb_moment = " << fmt(mj["lb_moment"].get<double>()) << "\n";
            for (double a : alphas) {
                if (a == 1.0 || !(a > 1.0 / (1.0 + rho))) continue;
                mj["lb_moment_renyi(" + fmt(a) + ")"] =
                    massent::lb_moment_renyi(renyi_entropy(a), a, rho);
            }
            moments["rho=" + fmt(rho)] = mj;
        }
        out["lower_bounds"] = lbs;
        out["moments"] = moments;
        return out;
    };

    if (!joint_file.empty()) {
        massent::JointPmf joint = massent::load_joint_csv_file(joint_file);
        record["inputs"]["joint"] = joint_file;
        double g = massent::conditional_guessing(joint, 1.0);
        double h = massent::conditional_entropy(joint, massent::EntropyOrder::shannon());
        double h_half = massent::conditional_entropy(joint, massent::EntropyOrder::renyi(0.5));
        results = emit_bounds(
            g, h, h_half,
            [&joint](double a) {
                return massent::conditional_entropy(joint, massent::EntropyOrder::renyi(a));
            },
            static_cast<long long>(joint.x_size()),
            [&joint](double rho) { return massent::conditional_guessing(joint, rho); });
        results["conditional"] = true;
    } else {
        massent::DiscretePmf pmf = pmf_file.empty() ? massent::build(parse_dist_spec(dist))
                                                    : massent::load_pmf_file(pmf_file);
        record["inputs"]["dist"] = pmf_file.empty() ? dist : pmf_file;
        auto profile = massent::guessing_profile(pmf);
        double h = massent::discrete_entropy(pmf, massent::EntropyOrder::shannon());
        double h_half = massent::discrete_entropy(pmf, massent::EntropyOrder::renyi(0.5));
        results = emit_bounds(
            profile.G, h, h_half,
            [&pmf](double a) {
                return massent::discrete_entropy(pmf, massent::EntropyOrder::renyi(a));
            },
            static_cast<long long>(pmf.size()),
            [&profile](double rho) { return massent::guessing_moment(profile, rho); });
        results["conditional"] = false;
    }

    record["results"] = results;
    emit_json(record, json_path);
    return kExitOk;
}

// ----------------------------------------------------------------- verify

int cmd_verify(std::uint64_t seed, int random_pmfs, int random_joints, bool find_thresholds,
               const std::string& report_path) {
    massent::SweepConfig cfg;
    cfg.seed = seed;
    if (random_pmfs >= 0) cfg.random_pmfs = random_pmfs;
    if (random_joints >= 0) cfg.random_joints = random_joints;
    cfg.find_thresholds = find_thresholds;

    massent::VerificationReport report = massent::full_sweep(cfg);
    std::cout << massent::report_summary(report);
    emit_json(massent::report_to_json(report), report_path);
    return report.passed() ? kExitOk : kExitViolation;
}

// ----------------------------------------------------------------- figure

int cmd_figure(const std::string& name, const std::string& output) {
    std::ostringstream csv;
    csv << std::setprecision(12);
    if (name == "fig3_moustache") {
        csv << "p,binary_entropy,moustache,massey\n";
        for (int i = 1; i < 200; ++i) {
            double p = i / 200.0;
            double hb = massent::binary_entropy(p);
            double sigma2 = p * (1.0 - p);
            double moustache =
                massent::mixed_variance(massent::SupportSpec::explicit_set({0, 1}), p, sigma2,
                                        massent::EntropyOrder::shannon())
                    .bound_bits;
            double massey =
                massent::massey_variance(sigma2, massent::EntropyOrder::shannon()).bound_bits;
            csv << p << "," << hb << "," << moustache << "," << massey << "\n";
        }
    } else if (name == "fig4_guessing") {
        csv << "entropy_bits,massey_original,improved\n";
        for (int i = 0; i <= 200; ++i) {
            double h = i * 0.05;
            csv << h << ",";
            if (auto orig = massent::lb_massey_original(h)) csv << *orig;
            csv << "," << massent::lb_improved(h) << "\n";
        }
    } else {
        throw UsageError("unknown figure '" + name + "' (fig3_moustache, fig4_guessing)");
    }

    if (output.empty() || output == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream out(resolve_output(output));
        if (!out) throw UsageError("cannot open output path: " + output);
        out << csv.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy bounds, guessing bounds and their verification"};
    app.require_subcommand(1);
    app.add_flag("--full-precision", g_full_precision,
                 "print shortest round-trip representations");

    std::string dist, pmf_file, joint_file, alpha_list, rho_list, json_path;
    std::string bound_list = "all";
    std::string figure_name, output_path, report_path;
    double sigma2 = 0.0, mu = 0.0;
    std::uint64_t seed = massent::SweepConfig{}.seed;
    int random_pmfs = -1, random_joints = -1;
    bool find_thresholds = false;

    auto* entropy = app.add_subcommand("entropy", "discrete Shannon/Renyi entropies in bits");
    entropy->add_option("--dist", dist, "distribution spec family:key=value,...");
    entropy->add_option("--pmf-file", pmf_file, "pmf file (text or .json)");
    entropy->add_option("--alpha", alpha_list, "comma list of orders; 1 means shannon");
    entropy->add_option("--json", json_path, "write an OutputRecord (path or '-')");

    auto* bounds = app.add_subcommand("bounds", "evaluate named entropy bounds");
    bounds->add_option("--dist", dist, "distribution spec");
    bounds->add_option("--pmf-file", pmf_file, "pmf file");
    bounds->add_option("--sigma2", sigma2, "variance, for parameter-only bounds");
    bounds->add_option("--mu", mu, "mean, for parameter-only bounds");
    bounds->add_option("--bound", bound_list, "comma list of bound names or 'all'");
    bounds->add_option("--alpha", alpha_list, "orders to evaluate at");
    bounds->add_option("--json", json_path, "write an OutputRecord");

    auto* guess = app.add_subcommand("guess", "guessing entropy, moments and lower bounds");
    guess->add_option("--dist", dist, "distribution spec");
    guess->add_option("--pmf-file", pmf_file, "pmf file");
    guess->add_option("--joint", joint_file, "joint pmf csv (conditional quantities)");
    guess->add_option("--rho", rho_list, "guessing moment orders");
    guess->add_option("--alpha", alpha_list, "Renyi orders for the entropy side");
    guess->add_option("--json", json_path, "write an OutputRecord");

    auto* verify = app.add_subcommand("verify", "run the global soundness sweep");
    verify->add_option("--seed", seed, "random pmf/joint seed");
    verify->add_option("--random-pmfs", random_pmfs, "number of random pmfs");
    verify->add_option("--random-joints", random_joints, "number of random joints");
    verify->add_flag("--find-thresholds", find_thresholds,
                     "locate the poisson/binomial/crossover thresholds");
    verify->add_option("--report", report_path, "write the JSON report (path or '-')");

    auto* figure = app.add_subcommand("figure", "emit figure data as CSV");
    figure->add_option("--name", figure_name, "fig3_moustache or fig4_guessing")->required();
    figure->add_option("--output", output_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (entropy->parsed()) {
            if (dist.empty() && pmf_file.empty())
                throw UsageError("entropy needs --dist or --pmf-file");
            return cmd_entropy(dist, pmf_file, alpha_list, json_path);
        }
        if (bounds->parsed()) {
            if (dist.empty() && pmf_file.empty() && sigma2 <= 0.0 && mu <= 0.0)
                throw UsageError("bounds needs --dist, --pmf-file, --sigma2 or --mu");
            return cmd_bounds(dist, pmf_file, sigma2, mu, bound_list, alpha_list, json_path);
        }
        if (guess->parsed()) {
            if (dist.empty() && pmf_file.empty() && joint_file.empty())
                throw UsageError("guess needs --dist, --pmf-file or --joint");
            return cmd_guess(dist, pmf_file, joint_file, rho_list, alpha_list, json_path);
        }
        if (verify->parsed())
            return cmd_verify(seed, random_pmfs, random_joints, find_thresholds, report_path);
        if (figure->parsed()) return cmd_figure(figure_name, output_path);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const massent::AccuracyError& e) {
        std::cerr << "accuracy error: " << e.what() << "\n";
        return kExitAccuracy;
    } catch (const massent::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
