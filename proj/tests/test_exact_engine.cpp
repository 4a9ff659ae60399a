#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lolab/exact_engine.hpp"
#include "lolab/rng.hpp"

using namespace lolab;

namespace {

Configuration axis_cfg(int t, int n) {
    RationalCoords rc;
    rc.scale = 1;
    for (int i = 0; i < n; ++i) rc.pairs.emplace_back(i < t ? 1 : 0, i < t ? 0 : 1);
    return Configuration::from_rational(rc);
}

Configuration axis_cfg_float(int t, int n) {
    std::vector<double> angles;
    for (int i = 0; i < n; ++i) angles.push_back(i < t ? 0.0 : std::numbers::pi / 2);
    return Configuration::from_angles(angles);
}

Configuration random_cfg(int n, std::uint64_t seed) {
    const CounterRng rng{seed};
    std::vector<double> angles;
    for (int i = 0; i < n; ++i)
        angles.push_back(rng.uniform(std::uint64_t(i)) * 2.0 * std::numbers::pi);
    return Configuration::from_angles(angles);
}

bool same_counts(const CountResult& a, const CountResult& b) {
    return a.n == b.n && a.r_sq == b.r_sq && a.count_inside == b.count_inside &&
           a.count_uncertain == b.count_uncertain && a.total == b.total &&
           a.prob_lower == b.prob_lower && a.prob_upper == b.prob_upper;
}

}  // namespace

TEST_CASE("naive on two orthogonal unit vectors at r^2 = 2") {
    const auto r = naive_probability(axis_cfg(1, 2), 2.0);
    CHECK(r.count_inside == 4);
    CHECK(r.total == 4);
    CHECK(r.count_uncertain == 0);
    CHECK(r.prob_lower == 1.0);
}

TEST_CASE("naive on the n=4 axis configuration") {
    // exact-rational mode: boundary mass lands inside with zero band
    const auto exact = naive_probability(axis_cfg(1, 4), 2.0);
    CHECK(exact.count_inside == 12);
    CHECK(exact.total == 16);
    CHECK(exact.prob_lower == 0.75);
    CHECK(exact.prob_upper == 0.75);

    // float mode: the same mass is boundary-uncertain, bracketed
    const auto audit = naive_probability(axis_cfg_float(1, 4), 2.0);
    CHECK(audit.count_inside == 0);
    CHECK(audit.count_uncertain == 12);
    CHECK(audit.prob_upper == 0.75);

    // below the counterexample radius nothing qualifies in either mode
    const auto below = naive_probability(axis_cfg(1, 4), 1.96);
    CHECK(below.count_inside == 0);
    CHECK(below.count_uncertain == 0);
    const auto below_f = naive_probability(axis_cfg_float(1, 4), 1.96);
    CHECK(below_f.count_inside == 0);
    CHECK(below_f.count_uncertain == 0);
}

TEST_CASE("mitm examples") {
    RationalCoords rc;
    rc.scale = 1;
    for (int i = 0; i < 10; ++i) rc.pairs.emplace_back(1, 0);
    const auto r = exact_probability(Configuration::from_rational(rc), 0.25);
    CHECK(r.count_inside == 252);  // C(10,5)
    CHECK(r.total == 1024);

    const auto single = exact_probability(axis_cfg(1, 1), 0.5);
    CHECK(single.count_inside == 0);
    CHECK(single.prob_upper == 0.0);
}

TEST_CASE("n = 1 degenerate") {
    const auto yes = exact_probability(axis_cfg(1, 1), 1.0);
    CHECK(yes.prob_lower == 1.0);
    const auto no = exact_probability(axis_cfg(1, 1), 0.999999);
    CHECK(no.prob_upper == 0.0);
}

TEST_CASE("oracle equivalence on random configurations") {
    for (int trial = 0; trial < 60; ++trial) {
        const CounterRng rng{900 + std::uint64_t(trial)};
        const int n = 1 + int(rng.word(0) % 12);
        const auto cfg = random_cfg(n, 1000 + std::uint64_t(trial));
        const double r_sq = rng.uniform(1) * double(n) * double(n);
        const auto a = naive_probability(cfg, r_sq);
        const auto b = exact_probability(cfg, r_sq);
        CHECK(same_counts(a, b));
    }
}

TEST_CASE("oracle equivalence in exact mode") {
    // Pythagorean 3-4-5 directions
    const std::vector<std::pair<std::int64_t, std::int64_t>> dirs = {
        {5, 0}, {4, 3}, {3, 4}, {0, 5}, {-3, 4}, {-4, 3}, {-5, 0}, {4, -3}};
    for (int trial = 0; trial < 40; ++trial) {
        const CounterRng rng{7000 + std::uint64_t(trial)};
        const int n = 2 + int(rng.word(0) % 9);
        RationalCoords rc;
        rc.scale = 5;
        for (int i = 0; i < n; ++i)
            rc.pairs.push_back(dirs[rng.word(10 + std::uint64_t(i)) % dirs.size()]);
        const auto cfg = Configuration::from_rational(rc);
        const double r_sq = rng.uniform(1) * double(n) * double(n);
        CHECK(same_counts(naive_probability(cfg, r_sq), exact_probability(cfg, r_sq)));
    }
}

TEST_CASE("parallel determinism") {
    const auto cfg = random_cfg(16, 33);
    const auto a = exact_probability(cfg, 3.7, std::nullopt, 1);
    const auto b = exact_probability(cfg, 3.7, std::nullopt, 3);
    CHECK(same_counts(a, b));
}

TEST_CASE("monotonicity in r_sq") {
    const auto cfg = random_cfg(10, 5);
    double prev_lo = -1.0, prev_hi = -1.0;
    for (double r_sq : {0.0, 0.5, 1.0, 2.0, 4.0, 9.0, 100.0}) {
        const auto r = exact_probability(cfg, r_sq);
        CHECK(r.prob_lower >= prev_lo);
        CHECK(r.prob_upper >= prev_hi);
        prev_lo = r.prob_lower;
        prev_hi = r.prob_upper;
    }
}

TEST_CASE("sign symmetry makes all counts even") {
    for (int trial = 0; trial < 10; ++trial) {
        const auto cfg = random_cfg(9, 100 + std::uint64_t(trial));
        const auto r = exact_probability(cfg, 2.0);
        CHECK(r.count_inside % 2 == 0);
        CHECK(r.count_uncertain % 2 == 0);
    }
}

TEST_CASE("count conservation") {
    const auto cfg = random_cfg(11, 8);
    const auto r = exact_probability(cfg, 1.5);
    CHECK(r.count_inside + r.count_uncertain <= r.total);
    CHECK(r.total == (std::uint64_t(1) << 11));
    CHECK(r.prob_lower <= r.prob_upper);
}

TEST_CASE("exact_q examples") {
    const auto half = exact_q(axis_cfg(1, 1), 1.0);
    CHECK(half.prob_lower == 0.5);
    const auto one = exact_q(axis_cfg(1, 1), 2.0);
    CHECK(one.prob_lower == 1.0);
    const auto quarter = exact_q(axis_cfg(1, 2), 0.5);
    CHECK(quarter.count_inside == 4);
    CHECK(quarter.total == 16);
}

TEST_CASE("capacity errors") {
    CHECK_THROWS_AS(naive_probability(random_cfg(21, 1), 1.0), std::length_error);
    CHECK_THROWS_AS(exact_q(random_cfg(21, 2), 1.0), std::length_error);
}

TEST_CASE("mean_norm_sq") {
    CHECK(mean_norm_sq(random_cfg(3, 17)) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(mean_norm_sq(axis_cfg(1, 1)) == doctest::Approx(1.0));
    RationalCoords rc;
    rc.scale = 1;
    rc.pairs = {{1, 0}, {-1, 0}};
    CHECK(mean_norm_sq(Configuration::from_rational(rc)) == doctest::Approx(2.0));
}
