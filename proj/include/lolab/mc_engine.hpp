#pragma once

#include <cstdint>
#include <string>

#include "lolab/configuration.hpp"

namespace lolab {

/// Monte Carlo estimate with a Wilson score interval.
struct McEstimate {
    double point{0.0};
    double ci_low{0.0};
    double ci_high{1.0};
    std::uint64_t samples{0};
    std::uint64_t seed{0};
    double confidence{0.95};
    std::string generator;
    std::uint64_t hits{0};
};

/// Quantile of the standard normal distribution (absolute error < 1e-11).
double normal_quantile(double p);

/// Wilson score interval for `hits` successes out of `samples` at the given
/// two-sided confidence level.
std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t samples,
                                          double confidence);

/// Seeded estimate of Pr[|sigma_V|^2 <= r_sq]. Deterministic in (V, r_sq,
/// samples, seed) and independent of the worker count.
McEstimate mc_probability(const Configuration& v, double r_sq, std::uint64_t samples,
                          std::uint64_t seed, double confidence = 0.95, int threads = 0);

/// Seeded estimate of Pr[|X - X'| <= a] for two independent copies of sigma_V.
McEstimate mc_q(const Configuration& v, double a, std::uint64_t samples, std::uint64_t seed,
                double confidence = 0.95, int threads = 0);

}  // namespace lolab
