#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>

#include "wavefront/local.hpp"
#include "wavefront/scan.hpp"

using namespace wavefront;

namespace {

const WaveParams kRef = validate(2, 3, 2, 1);

bool same(double a, double b) { return a == b || (std::isinf(a) && std::isinf(b) && (a > 0) == (b > 0)); }

}  // namespace

TEST_CASE("arange_inclusive hits both ends") {
    const auto v = arange_inclusive(-2.0, 4.0, 0.1);
    CHECK(v.size() == 61);
    CHECK(v.front() == -2.0);
    CHECK(v.back() == doctest::Approx(4.0));
    CHECK(arange_inclusive(1.0, 1.0, 0.5).size() == 1);
    CHECK_THROWS_AS(arange_inclusive(0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("parallel crossing scan matches the serial reference") {
    const auto speeds = arange_inclusive(-2.0, 4.0, 0.25);
    const IntegratorConfig cfg;
    const auto serial = scan_crossings(kRef, speeds, cfg, kDefaultSeedOffset, Exec::Serial);
    const auto parallel = scan_crossings(kRef, speeds, cfg, kDefaultSeedOffset, Exec::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CAPTURE(speeds[i]);
        CHECK(serial[i].c == parallel[i].c);
        CHECK(same(serial[i].x1, parallel[i].x1));
        CHECK(same(serial[i].x0, parallel[i].x0));
    }
}

TEST_CASE("parallel return-map scan matches the serial reference") {
    std::vector<double> starts;
    for (int i = 1; i <= 24; ++i) starts.push_back(1.0 + 0.02 * i);
    const IntegratorConfig cfg;
    const auto serial = scan_return_map(kRef, 1.8, starts, cfg, Exec::Serial);
    const auto parallel = scan_return_map(kRef, 1.8, starts, cfg, Exec::Parallel);
    REQUIRE(serial.size() == parallel.size());
    std::size_t returned = 0;
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].x_return.has_value() == parallel[i].x_return.has_value());
        if (serial[i].x_return && parallel[i].x_return) {
            CHECK(*serial[i].x_return == *parallel[i].x_return);
            ++returned;
        }
    }
    CHECK(returned > 0);
}

TEST_CASE("crossing monotonicity on the reference grid") {
    const auto speeds = arange_inclusive(-2.0, 4.0, 0.1);
    const MonotonicityReport rep = monotonicity_scan(kRef, speeds, IntegratorConfig{}, kDefaultSeedOffset,
                                                     Exec::Parallel);
    CHECK(rep.x1_monotone);
    CHECK(rep.x0_monotone);
    CHECK(rep.gap_sign_changes == 1);
    CHECK(rep.passed());
    CHECK(rep.violations.empty());
}

TEST_CASE("errors surface in index order") {
    std::vector<int> hit(16, 0);
    try {
        for_each_index(16, Exec::Parallel, [&](std::size_t i) {
            hit[i] = 1;
            if (i == 5 || i == 11) throw std::runtime_error(std::to_string(i));
        });
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "5");
    }
    for (int h : hit) CHECK(h == 1);
}

TEST_CASE("thread cap from the environment") {
    setenv("WAVEFRONT_THREADS", "3", 1);
    CHECK(kernel_threads() == 3);
    setenv("WAVEFRONT_THREADS", "zero", 1);
    CHECK(kernel_threads() >= 1);
    unsetenv("WAVEFRONT_THREADS");
}
