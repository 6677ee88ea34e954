#pragma once

#include <stdexcept>
#include <string>

namespace massent {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter is outside its legal range (p not in [0,1], lambda <= 0, ...).
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// A constructed object violates its invariants (negative mass, unsorted
/// support, non-normalizable input, ...).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A bound or density was requested outside its admissible order range.
/// Carries the threshold so callers can print the exact condition.
class ValidityError : public Error {
  public:
    ValidityError(const std::string& what, double threshold)
        : Error(what), threshold_(threshold) {}

    double threshold() const { return threshold_; }

  private:
    double threshold_;
};

/// Conditioning on an event of probability zero.
class DegenerateConditionError : public Error {
  public:
    using Error::Error;
};

/// A numerical routine could not reach its accuracy target
/// (quadrature non-convergence, series term budget exhausted).
class AccuracyError : public Error {
  public:
    using Error::Error;
};

/// An operation was asked for a variant it does not support
/// (e.g. partition constants of a non-alpha density).
class UnsupportedVariantError : public Error {
  public:
    using Error::Error;
};

}  // namespace massent
