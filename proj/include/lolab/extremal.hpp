#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lolab/configuration.hpp"

namespace lolab {

/// Exact probabilities of the axis family (t copies of (1,0), n-t copies of
/// (0,1)) for all split points t, with the scaled minimum n * min_t P.
struct AxisProfile {
    int n{0};
    double r_sq{0.0};
    std::vector<mpq_class> per_t;  // indexed by t = 0..n
    int argmin_t{0};
    double min_scaled{0.0};
};

/// Exact Pr[|sigma|^2 <= r_sq] for the axis configuration with split t:
/// 2^-n * sum over lattice points (t-2j)^2 + (n-t-2k)^2 <= r_sq of
/// C(t,j) C(n-t,k), with the boundary comparison done exactly.
mpq_class axis_probability(int n, int t, double r_sq);

AxisProfile axis_profile(int n, double r_sq);

struct ExtremalEntry {
    int n{0};
    int axis_argmin_t{0};
    double axis_min_scaled{0.0};
    std::optional<double> searched_probability;
    std::optional<double> searched_scaled;
    std::vector<double> searched_angles;
};

/// Scaled minima report: per-n axis minima of n * P (plus searched minima
/// when a search was run). No claim is made that the axis family attains the
/// true infimum.
struct ExtremalReport {
    double r{0.0};
    std::vector<ExtremalEntry> entries;
    std::optional<std::uint64_t> seed;
};

ExtremalReport f_probe(double r, const std::vector<int>& n_list);

struct SearchResult {
    std::vector<double> angles;     // best configuration found
    double probability{1.0};        // its prob_upper
    double start_probability{1.0};  // objective of that restart's start
    int restarts{0};
    std::uint64_t seed{0};
};

/// Randomized single-coordinate descent over angle vectors in [0, pi)^n,
/// minimizing the exact engine's prob_upper (Monte Carlo objective beyond
/// n = 24). Deterministic under a fixed seed. Restart 0 starts from the best
/// axis configuration, so the result never exceeds the axis minimum.
SearchResult search_min(int n, double r_sq, std::uint64_t seed, int iterations,
                        int restarts = 200);

}  // namespace lolab
