#include "lolab/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lolab/dyadic.hpp"
#include "lolab/exact_engine.hpp"
#include "lolab/mc_engine.hpp"
#include "lolab/rng.hpp"

namespace lolab {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace

mpq_class axis_probability(int n, int t, double r_sq) {
    if (n < 1) throw std::invalid_argument("axis_probability: n >= 1");
    if (t < 0 || t > n) throw std::invalid_argument("axis_probability: 0 <= t <= n");
    mpz_class hits = 0;
    // x = t - 2j runs over t, t-2, ..., -t; same for y over the other axis.
    for (std::int64_t x = -t; x <= t; x += 2) {
        const uint128 x2 = uint128(int128(x) * x);
        if (!int_le_double(x2, r_sq)) continue;
        for (std::int64_t y = -(n - t); y <= n - t; y += 2) {
            const uint128 s = x2 + uint128(int128(y) * y);
            if (!int_le_double(s, r_sq)) continue;
            hits += binom(unsigned(t), unsigned((t - x) / 2)) *
                    binom(unsigned(n - t), unsigned((n - t - y) / 2));
        }
    }
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), mp_bitcnt_t(n));
    mpq_class p(hits, den);
    p.canonicalize();
    return p;
}

AxisProfile axis_profile(int n, double r_sq) {
    if (n < 1) throw std::invalid_argument("axis_profile: n >= 1");
    AxisProfile prof;
    prof.n = n;
    prof.r_sq = r_sq;
    prof.per_t.reserve(std::size_t(n) + 1);
    for (int t = 0; t <= n; ++t) prof.per_t.push_back(axis_probability(n, t, r_sq));
    prof.argmin_t = 0;
    for (int t = 1; t <= n; ++t)
        if (prof.per_t[std::size_t(t)] < prof.per_t[std::size_t(prof.argmin_t)]) prof.argmin_t = t;
    prof.min_scaled = double(n) * prof.per_t[std::size_t(prof.argmin_t)].get_d();
    return prof;
}

ExtremalReport f_probe(double r, const std::vector<int>& n_list) {
    if (!(r > 0.0)) throw std::invalid_argument("f_probe: r > 0");
    ExtremalReport rep;
    rep.r = r;
    for (int n : n_list) {
        const AxisProfile prof = axis_profile(n, r * r);
        ExtremalEntry e;
        e.n = n;
        e.axis_argmin_t = prof.argmin_t;
        e.axis_min_scaled = prof.min_scaled;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

namespace {

double objective(const std::vector<double>& angles, double r_sq, std::uint64_t mc_seed) {
    const Configuration cfg = Configuration::from_angles(angles);
    if (angles.size() <= 24) return exact_probability(cfg, r_sq).prob_upper;
    return mc_probability(cfg, r_sq, 100000, mc_seed).point;
}

}  // namespace

SearchResult search_min(int n, double r_sq, std::uint64_t seed, int iterations, int restarts) {
    if (n < 1) throw std::invalid_argument("search_min: n >= 1");
    if (iterations < 1) throw std::invalid_argument("search_min: iterations >= 1");
    if (restarts < 1) throw std::invalid_argument("search_min: restarts >= 1");

    const double pi = std::numbers::pi;
    const AxisProfile prof = axis_profile(n, r_sq);

    SearchResult best;
    best.probability = 2.0;  // above any probability
    best.restarts = restarts;
    best.seed = seed;

    for (int rs = 0; rs < restarts; ++rs) {
        const CounterRng rng{CounterRng::derive(seed, std::uint64_t(rs))};
        const std::uint64_t mc_seed = CounterRng::derive(seed, 0x6F626AULL);
        std::uint64_t ctr = 0;

        std::vector<double> angles(static_cast<std::size_t>(n));
        if (rs == 0) {
            for (int i = 0; i < n; ++i) angles[std::size_t(i)] = i < prof.argmin_t ? 0.0 : pi / 2;
        } else {
            for (int i = 0; i < n; ++i) angles[std::size_t(i)] = rng.uniform(ctr++) * pi;
        }

        double cur = objective(angles, r_sq, mc_seed);
        const double start = cur;
        double step = 0.5;
        int rejections = 0;
        for (int it = 0; it < iterations; ++it) {
            const std::size_t coord = std::size_t(rng.word(ctr++) % std::uint64_t(n));
            const double delta = (rng.uniform(ctr++) * 2.0 - 1.0) * step;
            const double old = angles[coord];
            double moved = std::fmod(old + delta, pi);
            if (moved < 0.0) moved += pi;
            angles[coord] = moved;
            const double val = objective(angles, r_sq, mc_seed);
            if (val <= cur) {
                cur = val;
                rejections = 0;
            } else {
                angles[coord] = old;
                if (++rejections >= 50) {
                    step *= 0.5;
                    rejections = 0;
                }
            }
        }
        // lexicographically first minimizer among equal values, for
        // determinism under any future parallelization of restarts
        if (cur < best.probability ||
            (cur == best.probability && angles < best.angles)) {
            best.probability = cur;
            best.angles = angles;
            best.start_probability = start;
        }
    }
    return best;
}

}  // namespace lolab
