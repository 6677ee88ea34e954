#pragma once

namespace massent {

/// Natural log of the Gamma function for x > 0, Lanczos approximation
/// (g = 7, 9 terms). Relative accuracy better than 1e-13 over the whole
/// positive axis; throws ParameterError for x <= 0.
double log_gamma(double x);

/// log Gamma(a) - log Gamma(b); both arguments must be positive.
double log_gamma_ratio(double a, double b);

/// log(k!) with a cached table for small k.
double log_factorial(long long k);

/// log of the binomial coefficient C(n, k).
double log_binomial(long long n, long long k);

/// Arithmetic-geometric mean of a, b > 0.
double agm(double a, double b);

/// Gauss's constant 1/AGM(1, sqrt 2), computed to machine precision.
double gauss_constant();

}  // namespace massent
