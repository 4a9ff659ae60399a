#include "lolab/mc_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lolab/parallel.hpp"
#include "lolab/rng.hpp"

namespace lolab {

namespace {

// Acklam's rational approximation, polished with one Halley step on erfc.
double normal_quantile_approx(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

struct Hits {
    std::uint64_t h{0};
};

}  // namespace

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_quantile: p in (0,1)");
    double x = normal_quantile_approx(p);
    // One Halley refinement against the exact CDF via erfc.
    for (int it = 0; it < 2; ++it) {
        const double cdf = 0.5 * std::erfc(-x / std::sqrt(2.0));
        const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * 3.14159265358979323846);
        if (pdf <= 0.0) break;
        const double u = (cdf - p) / pdf;
        x -= u / (1.0 + 0.5 * x * u);
    }
    return x;
}

std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t samples,
                                          double confidence) {
    if (samples == 0) throw std::invalid_argument("wilson_interval: samples >= 1");
    const double z = normal_quantile(1.0 - (1.0 - confidence) / 2.0);
    const double s = double(samples);
    const double phat = double(hits) / s;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / s;
    const double center = (phat + z2 / (2.0 * s)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / s + z2 / (4.0 * s * s)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

McEstimate run_mc(const Configuration& v, double r_sq, std::uint64_t samples,
                  std::uint64_t seed, double confidence, int threads, bool pair_mode,
                  double a) {
    if (samples == 0) throw std::invalid_argument("mc: samples >= 1");
    const int n = int(v.size());
    const auto& vs = v.vectors();
    const std::uint64_t words_per_draw = std::uint64_t((n + 63) / 64);
    const std::uint64_t words_per_trial = pair_mode ? 2 * words_per_draw : words_per_draw;
    const CounterRng rng{seed};
    const double threshold = pair_mode ? a * a : r_sq;

    const auto draw_sum = [&](std::uint64_t base_ctr) {
        double sx = 0.0, sy = 0.0;
        int i = 0;
        for (std::uint64_t w = 0; w < words_per_draw; ++w) {
            std::uint64_t bits = rng.word(base_ctr + w);
            const int hi = std::min(n - i, 64);
            for (int b = 0; b < hi; ++b, ++i) {
                const double s = (bits & 1) ? 1.0 : -1.0;
                sx += s * vs[std::size_t(i)].x();
                sy += s * vs[std::size_t(i)].y();
                bits >>= 1;
            }
        }
        return Vec2{sx, sy};
    };

    const int nthreads = resolve_threads(threads);
    std::vector<Hits> acc(std::size_t(nthreads) + 1);
    parallel_chunks(samples, nthreads, [&](int chunk, std::uint64_t b, std::uint64_t e) {
        std::uint64_t h = 0;
        for (std::uint64_t t = b; t < e; ++t) {
            const std::uint64_t base = t * words_per_trial;
            Vec2 s = draw_sum(base);
            if (pair_mode) {
                const Vec2 s2 = draw_sum(base + words_per_draw);
                s = s - s2;
            }
            if (s.norm_sq() <= threshold) ++h;
        }
        acc[std::size_t(chunk)].h = h;
    });
    std::uint64_t hits = 0;
    for (const auto& x : acc) hits += x.h;

    McEstimate est;
    est.point = double(hits) / double(samples);
    std::tie(est.ci_low, est.ci_high) = wilson_interval(hits, samples, confidence);
    est.samples = samples;
    est.seed = seed;
    est.confidence = confidence;
    est.generator = kGeneratorName;
    est.hits = hits;
    return est;
}

}  // namespace

McEstimate mc_probability(const Configuration& v, double r_sq, std::uint64_t samples,
                          std::uint64_t seed, double confidence, int threads) {
    return run_mc(v, r_sq, samples, seed, confidence, threads, false, 0.0);
}

McEstimate mc_q(const Configuration& v, double a, std::uint64_t samples, std::uint64_t seed,
                double confidence, int threads) {
    return run_mc(v, 0.0, samples, seed, confidence, threads, true, a);
}

}  // namespace lolab
