#include "lolab/lemma_suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lolab/geometry.hpp"
#include "lolab/pipeline.hpp"
#include "lolab/rng.hpp"

namespace lolab {

namespace {

constexpr double kPi = std::numbers::pi;

struct Stream {
    CounterRng rng;
    std::uint64_t ctr{0};
    double u() { return rng.uniform(ctr++); }
    std::uint64_t w() { return rng.word(ctr++); }
};

// track the worst (most negative) slack of "lhs <= rhs + tol" checks
struct Check {
    SuiteResult res;
    void require_le(double lhs, double rhs, double tol = kAngleTol) {
        const double slack = rhs + tol - lhs;
        res.worst_margin = std::min(res.worst_margin, slack);
        if (slack < 0.0) ++res.violations;
    }
    void require(bool ok) {
        if (!ok) {
            ++res.violations;
            res.worst_margin = std::min(res.worst_margin, -1.0);
        }
    }
};

std::vector<double> sorted_args(Stream& s, int n, double lo, double hi) {
    std::vector<double> a(static_cast<std::size_t>(n));
    for (auto& x : a) x = lo + s.u() * (hi - lo);
    std::sort(a.begin(), a.end());
    return a;
}

SuiteResult circle_order(std::uint64_t trials, std::uint64_t seed) {
    Stream s{CounterRng{CounterRng::derive(seed, 1)}};
    Check c;
    c.res = {"circle_order", trials, 0, 0.0};
    for (std::uint64_t t = 0; t < trials; ++t) {
        const int n = 2 + int(s.w() % 10);
        auto args = sorted_args(s, n - 1, 0.0, kPi);
        args.insert(args.begin(), 0.0);  // v1 = (1,0)
        args.push_back(kPi);             // close with (-1,0)
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < args.size(); ++i)
            sum += chord_sq(UnitVector::from_angle(args[i]), UnitVector::from_angle(args[i + 1]));
        c.require_le(sum, 4.0);
    }
    return c.res;
}

SuiteResult refinement(std::uint64_t trials, std::uint64_t seed) {
    Stream s{CounterRng{CounterRng::derive(seed, 2)}};
    Check c;
    c.res = {"refinement", trials, 0, 0.0};
    for (std::uint64_t t = 0; t < trials; ++t) {
        const int n = 3 + int(s.w() % 10);
        const auto args = sorted_args(s, n, 0.0, kPi);
        // random subsequence sharing both endpoints
        std::vector<double> sub{args.front()};
        for (std::size_t i = 1; i + 1 < args.size(); ++i)
            if (s.u() < 0.5) sub.push_back(args[i]);
        sub.push_back(args.back());
        const auto chord_sum = [](const std::vector<double>& a) {
            double sum = 0.0;
            for (std::size_t i = 0; i + 1 < a.size(); ++i)
                sum += chord_sq(UnitVector::from_angle(a[i]), UnitVector::from_angle(a[i + 1]));
            return sum;
        };
        c.require_le(chord_sum(args), chord_sum(sub));
    }
    return c.res;
}

SuiteResult obtuse_chord(std::uint64_t trials, std::uint64_t seed) {
    Stream s{CounterRng{CounterRng::derive(seed, 3)}};
    Check c;
    c.res = {"obtuse_chord", trials, 0, 0.0};
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto args = sorted_args(s, 3, 0.0, kPi);
        const auto a = UnitVector::from_angle(args[0]);
        const auto b = UnitVector::from_angle(args[1]);
        const auto d = UnitVector::from_angle(args[2]);
        c.require_le(chord_sq(a, b) + chord_sq(b, d), chord_sq(a, d));
    }
    return c.res;
}

SuiteResult three_point_set(std::uint64_t trials, std::uint64_t seed) {
    Stream s{CounterRng{CounterRng::derive(seed, 4)}};
    Check c;
    c.res = {"three_point_set", trials, 0, 0.0};
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double gamma = s.u() * kPi / 3.0;
        if (gamma <= 0.0) continue;
        // consecutive gaps all >= gamma, summing to pi
        const double t1 = gamma + s.u() * (kPi - 3.0 * gamma);
        const double t2 = gamma + s.u() * (kPi - t1 - 2.0 * gamma);
        const double args[4] = {0.0, t1, t1 + t2, kPi};
        double sum = 0.0;
        for (int i = 0; i < 3; ++i)
            sum += chord_sq(UnitVector::from_angle(args[i]), UnitVector::from_angle(args[i + 1]));
        c.require_le(sum, 4.0 - 8.0 * std::pow(std::sin(gamma / 2.0), 3.0));
    }
    return c.res;
}

SuiteResult kite_exists(std::uint64_t trials, std::uint64_t seed) {
    Stream s{CounterRng{CounterRng::derive(seed, 5)}};
    Check c;
    c.res = {"kite_exists", trials, 0, 0.0};
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto u = UnitVector::from_angle(s.u() * 2.0 * kPi);
        const auto u2 = UnitVector::from_angle(s.u() * 2.0 * kPi);
        const double rad = 0.5 * std::sqrt(s.u());
        const double th = s.u() * 2.0 * kPi;
        const Vec2 w{rad * std::cos(th), rad * std::sin(th)};
        try {
            const auto [e1, e2] = kite_signs(u, u2, w);
            const Vec2 r = w + u.vec() * double(e1) + u2.vec() * double(e2);
            c.require_le(r.norm_sq(), 2.0, 3e-9);
        } catch (...) {
            c.require(false);
        }
    }
    return c.res;
}

SuiteResult geometry_claim(std::uint64_t trials, std::uint64_t seed) {
    Stream s{CounterRng{CounterRng::derive(seed, 6)}};
    Check c;
    c.res = {"geometry_claim", trials, 0, 0.0};
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double beta = kPi / 2 + s.u() * (17.0 * kPi / 24.0 - kPi / 2);
        const double phi = s.u() * 2.0 * kPi;
        const auto u = UnitVector::from_angle(phi);
        const auto u2 = UnitVector::from_angle(phi + beta);
        const double rad = std::sqrt(3.0 * s.u());
        const double th = s.u() * 2.0 * kPi;
        const Vec2 w{rad * std::cos(th), rad * std::sin(th)};
        try {
            const auto [e1, e2] = geometry_signs(u, u2, w);
            const Vec2 r = w + u.vec() * double(e1) + u2.vec() * double(e2);
            c.require_le(r.norm_sq(), 2.0, 3e-9);
        } catch (...) {
            c.require(false);
        }
    }
    return c.res;
}

SuiteResult trig_identity(std::uint64_t trials, std::uint64_t seed) {
    Stream s{CounterRng{CounterRng::derive(seed, 7)}};
    Check c;
    c.res = {"trig_identity", trials, 0, 0.0};
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double t1 = s.u() * kPi;
        const double t2 = s.u() * (kPi - t1);
        const double t3 = kPi - t1 - t2;
        const auto s2 = [](double x) {
            const double v = std::sin(x / 2);
            return v * v;
        };
        const double lhs = 4.0 * (s2(t1) + s2(t2) + s2(t3));
        const double rhs =
            4.0 * (1.0 - 2.0 * std::sin(t1 / 2) * std::sin(t2 / 2) * std::sin(t3 / 2));
        c.require_le(std::abs(lhs - rhs), 0.0);
    }
    return c.res;
}

SuiteResult iterate_sample(std::uint64_t trials, std::uint64_t seed) {
    const std::uint64_t reps = std::min<std::uint64_t>(200, std::max<std::uint64_t>(1, trials / 500));
    Stream s{CounterRng{CounterRng::derive(seed, 8)}};
    Check c;
    c.res = {"iterate_identity", reps, 0, 0.0};
    for (std::uint64_t t = 0; t < reps; ++t) {
        const int n = 2 * (1 + int(s.w() % 3));
        std::vector<double> angles(static_cast<std::size_t>(n));
        for (auto& a : angles) a = s.u() * 2.0 * kPi;
        c.require(iterate_identity_check(Configuration::from_angles(angles)));
    }
    return c.res;
}

}  // namespace

std::vector<SuiteResult> run_lemma_suites(std::uint64_t trials, std::uint64_t seed) {
    return {circle_order(trials, seed),    refinement(trials, seed),
            obtuse_chord(trials, seed),    three_point_set(trials, seed),
            kite_exists(trials, seed),     geometry_claim(trials, seed),
            trig_identity(trials, seed),   iterate_sample(trials, seed)};
}

}  // namespace lolab
