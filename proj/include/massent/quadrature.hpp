#pragma once

#include <functional>
#include <span>
#include <vector>

namespace massent::quad {

struct Options {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;      // 0 disables the relative target
    int max_intervals = 60000;
};

struct Result {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
    int intervals = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7,15) integration over [a, b].
Result integrate(const Integrand& f, double a, double b, const Options& opts = {});

/// Same, with an initial subdivision at the given interior breakpoints
/// (known kinks, steps or support edges of the integrand).
Result integrate(const Integrand& f, double a, double b,
                 std::span<const double> breakpoints, const Options& opts = {});

/// Integral over the whole real line via the map x = t / (1 - t^2).
Result integrate_line(const Integrand& f, const Options& opts = {});

/// Integral over [a, +inf) via the map x = a + t / (1 - t).
Result integrate_from(const Integrand& f, double a, const Options& opts = {});

/// Geometric refinement points accumulating at `edge` from `from`; used to
/// pre-split integrands whose derivatives blow up at a support edge.
std::vector<double> edge_refined_breakpoints(double from, double edge, int levels = 40);

}  // namespace massent::quad
