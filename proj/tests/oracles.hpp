#pragma once

// Test-only reference computations. Nothing here calls into the library's
// formulas; each helper reaches the same quantity by a different route
// (summation, finite differences, search).

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

namespace flexcool::test {

// SI values re-entered here so the oracles do not share the library's constants header.
inline constexpr double kH = 6.62607015e-34;
inline constexpr double kHbar = kH / (2.0 * 3.14159265358979323846);
inline constexpr double kKB = 1.380649e-23;
inline constexpr double kMuB = 9.2740100783e-24;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kMassRb = 1.44316e-25;

/// Mean of the Bose–Einstein distribution by direct summation of n·e^{−nβħω}.
inline double bose_mean_by_summation(double omega, double temperature) {
    const double r = std::exp(-kHbar * omega / (kKB * temperature));
    double z = 0.0;
    double m = 0.0;
    double w = 1.0;
    for (std::int64_t n = 0; n < 50'000'000 && w > 1e-300; ++n) {
        z += w;
        m += static_cast<double>(n) * w;
        w *= r;
        if (n > 100 && w < 1e-18 * z) break;
    }
    return m / z;
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Golden-section search for the maximum of a unimodal f on [a, b].
inline double golden_section_max(const std::function<double(double)>& f, double a, double b, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

inline double golden_section_min(const std::function<double(double)>& f, double a, double b, double tol) {
    return golden_section_max([&](double x) { return -f(x); }, a, b, tol);
}

/// Fixed-seed generator for property tests.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    /// 10^U(log10 lo, log10 hi).
    double log_uniform(double lo, double hi) {
        return std::pow(10.0, uniform(std::log10(lo), std::log10(hi)));
    }
    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
    }

private:
    std::mt19937_64 rng_;
};

} // namespace flexcool::test
