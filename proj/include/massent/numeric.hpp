#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>

namespace massent {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;
inline constexpr double kLog2E = std::numbers::log2e;  // conversion nats -> bits
inline constexpr double kLn2 = std::numbers::ln2;

/// Neumaier-compensated accumulator. Keeps the running error of a long sum
/// below a few ulp regardless of term count, so 1e5-atom distributions still
/// meet 1e-12 tolerances.
class CompensatedSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    CompensatedSum& operator+=(double x) {
        add(x);
        return *this;
    }

    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
    CompensatedSum acc;
    for (double x : xs) acc += x;
    return acc.value();
}

/// log2 with the 0 log 0 = 0 convention applied by the caller; here just a
/// base-2 wrapper around std::log for consistency across the library.
inline double log2_of(double x) { return std::log(x) * kLog2E; }

inline double bits_from_nats(double nats) { return nats * kLog2E; }

}  // namespace massent
