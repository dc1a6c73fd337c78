#include <doctest.h>

#include <cmath>
#include <numbers>

#include "minksym/oracle.hpp"
#include "minksym/star2d.hpp"

using namespace minksym;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("naive_minkowski_sum: discs, zero body, symmetry") {
    StarBody2D a = gen_disc(360, 1.0), b = gen_disc(360, 0.5);
    StarBody2D s = oracle::naive_minkowski_sum(a, b, 128);
    double cell = 2.0 * 1.5 / 128;
    for (double v : s.r) CHECK(std::abs(v - 1.5) <= 2.0 * cell);

    StarBody2D K = gen_random_star(4, 90, 0.2, 1.0);
    StarBody2D zero = make_star(90, std::vector<double>(90, 0.0));
    StarBody2D id = oracle::naive_minkowski_sum(K, zero, 128);
    double cid = 2.0 * outer_radius(K) / 128;
    for (int i = 0; i < 90; ++i) CHECK(std::abs(id.r[i] - K.r[i]) <= 4.0 * cid);

    // A + B = B + A exactly (same occupancy dilation either way)
    StarBody2D b90 = gen_disc(90, 0.5);
    StarBody2D ab = oracle::naive_minkowski_sum(K, b90, 96);
    StarBody2D ba = oracle::naive_minkowski_sum(b90, K, 96);
    for (int i = 0; i < 90; ++i) CHECK(ab.r[i] == ba.r[i]);

    CHECK_THROWS(oracle::naive_minkowski_sum(a, b, 512));  // too large for O(G^4)
    CHECK_THROWS(oracle::naive_minkowski_sum(zero, zero, 128));
}

TEST_CASE("interval_mean_width: closed forms") {
    CHECK(std::abs(oracle::interval_mean_width(2) - 1.0 / kPi) <= 1e-10);
    CHECK(std::abs(oracle::interval_mean_width(3) - 0.25) <= 1e-10);
    double prev = oracle::interval_mean_width(2);
    for (int n = 3; n <= 20; ++n) {
        double v = oracle::interval_mean_width(n);
        CHECK(v < prev);
        CHECK(v > 0.0);
        prev = v;
    }
    CHECK_THROWS(oracle::interval_mean_width(1));
}

TEST_CASE("mc_mean_width: ball exact, segment vs quadrature") {
    // the m=360 "disc" is an inscribed polygon: support in [cos(pi/360), 1]
    auto [mb, sb] = oracle::mc_mean_width(gen_disc(360, 1.0), 2000, 17);
    CHECK(mb == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(sb <= 1e-4);

    StarBody2D seg = gen_segment(720, 1.0, GridAngle{0});
    auto [ms, ss] = oracle::mc_mean_width(seg, 200000, 17);
    CHECK(std::abs(ms - 1.0 / kPi) <= 4.0 * ss + 1e-3);

    StarBody2D K = gen_random_star(8, 360, 0.2, 1.0);
    auto [m1, s1] = oracle::mc_mean_width(K, 100000, 5);
    CHECK(std::abs(m1 - mean_width(K)) <= 4.0 * s1 + 2e-3);

    auto [r1, e1] = oracle::mc_mean_width(K, 50000, 9);
    auto [r2, e2] = oracle::mc_mean_width(K, 50000, 9);
    CHECK(r1 == r2);  // deterministic
    CHECK(e1 == e2);
    CHECK_THROWS(oracle::mc_mean_width(K, 10, 1));  // below minimum sample count
}
