#include <doctest.h>

#include <cmath>
#include <sstream>

#include "minksym/pipeline.hpp"
#include "minksym/verify.hpp"

using namespace minksym;

TEST_CASE("q_factor: exact rational point and monotonicity") {
    CHECK(std::abs(q_factor(1.0 / 25.0) - 6.0 / 5.0) <= 1e-15);
    CHECK(q_factor(0.25) == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
    double prev = q_factor(1e-6);
    for (double e : {1e-5, 1e-4, 1e-3, 1e-2}) {
        double q = q_factor(e);
        CHECK(q < prev);  // decreasing in eps on (0,1)
        prev = q;
    }
    CHECK(q_factor(1.0 / 100.0) > 1.0);
}

TEST_CASE("budget_bounds: closed-form examples") {
    // N_b = ceil(|log2 sqrt(eps)|)
    auto [na16, nb16] = budget_bounds(1.0 / 16.0, 0.1);
    CHECK(nb16 == 2);
    auto [na100, nb100] = budget_bounds(1.0 / 100.0, 0.01);
    CHECK(nb100 == 4);  // |log2 0.1| = 3.32 -> 4
    // N_a = ceil(4 + 3 |ln(eps / r^2)|), eps=1/100, r=0.01 -> ln(100)
    CHECK(na100 == static_cast<int>(std::ceil(4.0 + 3.0 * std::log(100.0))));
    auto [na_eq, nb_eq] = budget_bounds(1.0 / 16.0, 0.25);  // eps = r^2 exactly -> ln term 0
    CHECK(na_eq == 4);
    (void)na16;
    (void)nb_eq;
    CHECK_THROWS(budget_bounds(0.0, 0.1));
    CHECK_THROWS(budget_bounds(0.04, 1.5));
}

TEST_CASE("run_theorem: disc terminates immediately per phase") {
    StarBody2D disc = gen_disc(720, 2.5);
    Strategy s = Strategy::grid_random_2d(1, 720);
    PipelineConfig cfg;
    cfg.raster_G = 256;
    RunReport rep = run_theorem(disc, 0.1, s, cfg);
    // a ball is already its own sandwich at every tolerance
    CHECK(rep.n2 == 0);
    CHECK(rep.n3a == 0);
    CHECK(rep.n3b == 0);
    CHECK(rep.rho_in_final >= 1.0 - 0.1 - 2.0 * 4.0 * 2.0 * 2.5 * 2.0 / 256);
    CHECK(std::abs(rep.m0 - 2.5) <= 1e-9);
}

TEST_CASE("run_theorem: cross body end to end, eps = 0.1") {
    StarBody2D K = gen_cross(720, 1.0, 0.15);
    Strategy s = Strategy::grid_random_2d(7, 720);
    PipelineConfig cfg;
    cfg.raster_G = 512;
    RunReport rep = run_theorem(K, 0.1, s, cfg);
    CHECK(rep.eps == doctest::Approx(0.1));
    CHECK(rep.eps_internal == doctest::Approx(std::min(0.01 / 16.0, 0.1 / 25.0)));
    CHECK(rep.total_steps() == static_cast<int>(rep.steps.size()));
    CHECK(rep.rho_in_final >= 1.0 - 0.1 - rep.steps.back().tau);
    CHECK(rep.rho_out_final <= 1.0 + 0.1 + rep.steps.back().tau);
    // rho_in column is monotone up to per-step tau
    for (size_t i = 1; i < rep.steps.size(); ++i)
        CHECK(rep.steps[i].rho_in >= rep.steps[i - 1].rho_in - rep.steps[i].tau - rep.steps[i - 1].tau);
    // phases appear in order
    for (size_t i = 1; i < rep.steps.size(); ++i)
        CHECK(rep.steps[i].phase >= rep.steps[i - 1].phase);
}

TEST_CASE("run_theorem: deterministic CSV replay") {
    StarBody2D K = gen_random_star(21, 720, 0.2, 1.0);
    PipelineConfig cfg;
    cfg.raster_G = 256;
    cfg.seed = 21;
    Strategy s1 = Strategy::grid_random_2d(21, 720);
    Strategy s2 = Strategy::grid_random_2d(21, 720);
    RunReport r1 = run_theorem(K, 0.2, s1, cfg);
    RunReport r2 = run_theorem(K, 0.2, s2, cfg);
    CHECK(step_csv_string(r1) == step_csv_string(r2));
    CHECK(step_csv_string(r1).find("step,phase,angle,rho_in,rho_out,mean_width,raddist,net,tau") == 0);
}

TEST_CASE("phase3_grow_ball: small seed ball, eps = 0.01") {
    double eps = 0.01;
    StarBody2D K = verify::gen_sandwiched(3, 720, eps);
    // grow an inner ball from r ~ 0.1 inside the sandwiched body: take the
    // union with a small disc so inner radius is exactly r
    double r0 = 0.1;
    for (auto& v : K.r) v = std::max(v, r0);
    LemmaParams p;
    p.eps = eps;
    p.eps_internal = eps;
    p.r = inner_radius(K);
    REQUIRE(p.r >= r0);
    REQUIRE(p.r <= 0.11);
    Strategy s = Strategy::grid_random_2d(5, 720);
    Phase3Result res = phase3_grow_ball(K, s, p, 512, 500);
    // case a multiplies rho_in by q(0.01) ~ 2.475 each step: <= 4 steps to 2 sqrt(eps)
    CHECK(res.n3a <= 4);
    auto [na, nb] = budget_bounds(eps, r0);
    CHECK(res.n3a <= na);
    CHECK(res.n3b <= nb + 1);
    CHECK(inner_radius(res.body) >= 1.0 - 4.0 * std::sqrt(eps) - 4.0 * 2.0 * 1.2 * 2.0 / 512);
}

TEST_CASE("phase1_interval_nd: reaches c2/sqrt(n)") {
    for (int n : {2, 3}) {
        Strategy s = n == 2 ? Strategy::grid_random_2d(9, 720) : Strategy::uniform_random(9);
        IntervalPhase1Result r = phase1_interval_nd(n, s, 0.2, n == 2 ? 720 : 1024, 2000);
        CHECK(r.final_min_h >= 0.2 / std::sqrt(n));
        CHECK(r.steps >= 1);
        CHECK(r.steps <= 200);
    }
}
