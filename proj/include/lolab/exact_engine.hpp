#pragma once

#include <cstdint>
#include <optional>

#include "lolab/configuration.hpp"

namespace lolab {

inline constexpr int kNaiveMax = 20;
inline constexpr int kMitmMax = 40;

/// Exact enumeration result for Pr[|sigma_V| <= r]. In float mode patterns
/// within eps_band of the boundary are counted as uncertain, so
/// [prob_lower, prob_upper] brackets the closed-ball probability; in
/// exact-rational mode the classification is exact and count_uncertain == 0.
struct CountResult {
    int n{0};
    double r_sq{0.0};
    std::uint64_t count_inside{0};
    std::uint64_t count_uncertain{0};
    std::uint64_t total{0};
    double prob_lower{0.0};
    double prob_upper{0.0};
    double eps_band{0.0};
    bool exact_mode{false};
};

/// Default audit band: 1e-9 * max(1, r_sq) * n.
double default_eps_band(double r_sq, int n);

/// Brute-force oracle: enumerates all 2^n sign patterns. Requires n <= 20.
CountResult naive_probability(const Configuration& v, double r_sq,
                              std::optional<double> eps_band = std::nullopt);

/// Meet-in-the-middle engine; identical contract and identical counts as
/// naive_probability on every instance where both run. Requires n <= 40.
CountResult exact_probability(const Configuration& v, double r_sq,
                              std::optional<double> eps_band = std::nullopt,
                              int threads = 0);

/// Pr[|X - X'| <= a] for two independent samples of sigma_V, computed as a
/// signed sum over the doubled sequence V || V. Requires 2n <= 40.
CountResult exact_q(const Configuration& v, double a,
                    std::optional<double> eps_band = std::nullopt, int threads = 0);

/// Sum of |v_i|^2 (the exact second moment of sigma_V); for n <= 20 this is
/// cross-checked against the enumerated E[|sigma_V|^2] to within 1e-9.
double mean_norm_sq(const Configuration& v);

}  // namespace lolab
