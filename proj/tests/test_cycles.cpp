#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "wavefront/cycles.hpp"

using namespace wavefront;

namespace {

const WaveParams kRef = validate(2, 3, 2, 1);

Trajectory circle(int turns, bool clockwise) {
    Trajectory t;
    const int steps = 200 * turns;
    for (int i = 0; i < steps; ++i) {
        const double a = 2.0 * std::numbers::pi * i / 200.0 * (clockwise ? -1.0 : 1.0);
        t.samples.push_back({static_cast<double>(i), 1.0 + 0.3 * std::cos(a), 0.3 * std::sin(a)});
    }
    return t;
}

}  // namespace

TEST_CASE("unstable cycle between c* and kn") {
    const CycleResult r = find_limit_cycle(kRef, 1.8, IntegratorConfig{});
    REQUIRE(r.found);
    CHECK(r.fixed_point_x == doctest::Approx(1.3328752).epsilon(1e-6));
    CHECK(r.period == doctest::Approx(10.0368).epsilon(1e-4));
    CHECK(r.closure < 1e-8);
    CHECK(r.winding == 1);
    CHECK(r.stability == CycleStability::Unstable);
    CHECK(r.amplitude == doctest::Approx(r.fixed_point_x - 1.0).epsilon(1e-6));
    CHECK_FALSE(r.orbit.empty());
    CHECK(std::abs(poincare_return(kRef, 1.8, r.fixed_point_x, IntegratorConfig{}) - r.fixed_point_x) < 1e-8);
}

TEST_CASE("cycle pressed against the basin edge of P1") {
    const CycleResult r = find_limit_cycle(kRef, 1.7, IntegratorConfig{});
    REQUIRE(r.found);
    CHECK(r.period > 20.0);
    CHECK(r.winding == 1);
}

TEST_CASE("no cycle outside the window") {
    for (double c : {1.6, 2.0, 2.5, 3.0}) {
        CAPTURE(c);
        CHECK_FALSE(find_limit_cycle(kRef, c, IntegratorConfig{}).found);
    }
}

TEST_CASE("Hopf shrinkage near kn") {
    const IntegratorConfig cfg;
    const CycleResult near = find_limit_cycle(kRef, 1.99, cfg);
    const CycleResult far = find_limit_cycle(kRef, 1.9, cfg);
    REQUIRE(near.found);
    REQUIRE(far.found);
    CHECK(near.amplitude < far.amplitude);
    CHECK(near.amplitude < 0.15);
}

TEST_CASE("replay repeats the closed orbit") {
    const CycleResult r = find_limit_cycle(kRef, 1.8, IntegratorConfig{});
    REQUIRE(r.found);
    const Trajectory t = replay_cycle(r, 3);
    CHECK(t.back().xi - t.front().xi == doctest::Approx(3.0 * r.period).epsilon(1e-6));
    CHECK(winding_number(t) == 3);
}

TEST_CASE("winding number orientation") {
    CHECK(winding_number(circle(1, true)) == 1);
    CHECK(winding_number(circle(2, true)) == 2);
    CHECK(winding_number(circle(1, false)) == -1);
}

TEST_CASE("Lienard curves are separated") {
    for (double c : {2.0, 3.0}) {
        const LienardCurves l = lienard_curves(kRef, c);
        CHECK(l.x.size() == 200);
        CHECK(l.min_gap > 0.0);
        CHECK(l.y1_decreasing);
        CHECK(l.y2_decreasing);
        for (std::size_t i = 0; i < l.x.size(); ++i) {
            CHECK(l.y1[i] > 1.0);
            CHECK(l.y2[i] > 1.0);
        }
    }
    // y1 solves k (y^n - x^n) = c (y - x), i.e. y = c/k - x for n = 2.
    CHECK(lienard_y1(kRef, 3.0, 0.4) == doctest::Approx(2.6));
    // G(y2) = G(x) with G(t) = t^4/4 - t^3/3.
    const double y2 = lienard_y2(kRef, 0.5);
    auto g = [](double t) { return t * t * t * t / 4.0 - t * t * t / 3.0; };
    CHECK(g(y2) == doctest::Approx(g(0.5)));
}

TEST_CASE("Lienard curves outside their domain") {
    CHECK_THROWS_AS(lienard_curves(kRef, 1.5), DomainError);
    CHECK_THROWS_AS(lienard_curves(validate(7, 3, 2, 1), 8.0), DomainError);
    CHECK_THROWS_AS(lienard_curves(validate(1, 3, 2, 1), 2.0), DomainError);
}

TEST_CASE("calculus lemmas on random exponents") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> qd(1.0, 4.0);
    std::uniform_real_distribution<double> gap(0.05, 4.0);
    for (int i = 0; i < 50; ++i) {
        const double q = qd(rng);
        const double p = q + gap(rng);
        const CalculusReport r = calculus_checks(validate(2, p, q, 1));
        CAPTURE(p);
        CAPTURE(q);
        CHECK(r.passed());
        CHECK(r.h_max < p - q);
        CHECK(r.inequality_lhs > r.inequality_rhs);
    }
}
