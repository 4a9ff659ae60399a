#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lolab/geometry.hpp"
#include "lolab/rng.hpp"

using namespace lolab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("arg_of on the axes") {
    CHECK(arg_of(UnitVector(1, 0)).radians == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(arg_of(UnitVector(0, 1)).radians == doctest::Approx(kPi / 2));
    CHECK(arg_of(UnitVector(-1, 0)).radians == doctest::Approx(kPi));
}

TEST_CASE("arg_of round trip on random angles") {
    const CounterRng rng{42};
    for (int i = 0; i < 2000; ++i) {
        const double theta = rng.uniform(std::uint64_t(i)) * 2.0 * kPi;
        const double back = arg_of(UnitVector::from_angle(theta)).radians;
        CHECK(std::abs(back - theta) < 1e-9);
    }
}

TEST_CASE("angle_between basics") {
    CHECK(angle_between(UnitVector(1, 0), UnitVector(0, 1)) == doctest::Approx(kPi / 2));
    CHECK(angle_between(UnitVector(1, 0), UnitVector(1, 0)) == doctest::Approx(0.0));
    CHECK(angle_between(UnitVector(1, 0), UnitVector(-1, 0)) == doctest::Approx(kPi));
}

TEST_CASE("chord_sq values") {
    CHECK(chord_sq(UnitVector(1, 0), UnitVector(0, 1)) == doctest::Approx(2.0));
    CHECK(chord_sq(UnitVector(1, 0), UnitVector(1, 0)) == doctest::Approx(0.0));
    // vectors at angle pi/3: 4 sin^2(pi/6) = 1
    CHECK(chord_sq(UnitVector::from_angle(0.3), UnitVector::from_angle(0.3 + kPi / 3)) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("chord-angle identity on random pairs") {
    const CounterRng rng{7};
    for (int i = 0; i < 2000; ++i) {
        const auto u = UnitVector::from_angle(rng.uniform(2 * std::uint64_t(i)) * 2 * kPi);
        const auto v = UnitVector::from_angle(rng.uniform(2 * std::uint64_t(i) + 1) * 2 * kPi);
        const double theta = angle_between(u, v);
        const double expect = 4.0 * std::sin(theta / 2) * std::sin(theta / 2);
        CHECK(std::abs(chord_sq(u, v) - expect) < 1e-9);
    }
}

TEST_CASE("gamma_close") {
    CHECK(gamma_close(UnitVector(1, 0), UnitVector(-1, 0), 0.1));
    CHECK_FALSE(gamma_close(UnitVector(1, 0), UnitVector(0, 1), 0.5));
    const auto v = UnitVector::from_angle(1.234);
    CHECK(gamma_close(v, v, 0.0));
    CHECK_THROWS_AS(gamma_close(v, v, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(gamma_close(v, v, 2.0), std::invalid_argument);
}

TEST_CASE("gamma_close symmetry and negation invariance") {
    const CounterRng rng{11};
    for (int i = 0; i < 1000; ++i) {
        const auto u = UnitVector::from_angle(rng.uniform(3 * std::uint64_t(i)) * 2 * kPi);
        const auto v = UnitVector::from_angle(rng.uniform(3 * std::uint64_t(i) + 1) * 2 * kPi);
        const double g = rng.uniform(3 * std::uint64_t(i) + 2) * kPi / 2;
        const bool a = gamma_close(u, v, g);
        CHECK(a == gamma_close(v, u, g));
        CHECK(a == gamma_close(u.negated(), v, g));
        CHECK(a == gamma_close(u, v.negated(), g));
    }
}

TEST_CASE("unit vector validation") {
    CHECK_NOTHROW(UnitVector(1.0 + 1e-7, 0.0));  // renormalized
    const UnitVector u(1.0 + 1e-7, 0.0);
    CHECK(std::abs(u.vec().norm_sq() - 1.0) <= kUnitEps);
    CHECK_THROWS_AS(UnitVector(1.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(UnitVector(0.0, 0.0), std::invalid_argument);
    const double nan = std::nan("");
    CHECK_THROWS_AS(UnitVector(nan, 1.0), std::invalid_argument);
}

TEST_CASE("three-point trig identity") {
    const CounterRng rng{99};
    for (int i = 0; i < 2000; ++i) {
        const double t1 = rng.uniform(2 * std::uint64_t(i)) * kPi;
        const double t2 = rng.uniform(2 * std::uint64_t(i) + 1) * (kPi - t1);
        const double t3 = kPi - t1 - t2;
        const auto s2 = [](double x) { return std::sin(x / 2) * std::sin(x / 2); };
        const double lhs = 4 * (s2(t1) + s2(t2) + s2(t3));
        const double rhs =
            4 * (1 - 2 * std::sin(t1 / 2) * std::sin(t2 / 2) * std::sin(t3 / 2));
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}
