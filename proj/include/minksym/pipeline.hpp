#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minksym/schedule.hpp"
#include "minksym/star2d.hpp"
#include "minksym/support_nd.hpp"

// Three-phase convergence driver: seed a small inner ball, round the
// convex hull to a sandwich, then grow the inner ball geometrically.
// Every per-step inequality is asserted at runtime (tau-adjusted); a
// violation is a bug, not a data point.

namespace minksym {

struct StepRecord {
    int step = 0;
    int phase = 0;          // 1, 2, 3
    double angle = 0.0;     // symmetrization direction (radians, 2D)
    double rho_in = 0.0;
    double rho_out = 0.0;
    double mean_width = 0.0;
    double raddist = 0.0;   // max_i |r[i] - 1| after normalization
    bool net = false;       // net_contained at the run's internal eps
    double tau = 0.0;
};

struct LemmaParams {
    double eps = 0.0;           // user-facing target
    double eps_internal = 0.0;  // derived; phase-3 epsilon
    double eps0 = 1.0 / 25.0;
    double r = 0.0;             // inner radius at phase-3 entry
    int n = 2;
};

struct RunReport {
    int n1 = 0, n2 = 0, n3a = 0, n3b = 0;
    int budget_na = 0, budget_nb = 0;
    double rho_in_final = 0.0, rho_out_final = 0.0;
    double m0 = 0.0;
    double eps = 0.0, eps_internal = 0.0;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
    bool budget_warning = false;      // measured > 2x theoretical
    double interval_rho_in = -1.0;    // via-interval mode only
    std::vector<StepRecord> steps;

    int total_steps() const { return n1 + n2 + n3a + n3b; }
};

struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PipelineConfig {
    int raster_G = 1024;
    double c2 = 0.2;             // phase-1 inner-radius coefficient
    int max_steps_phase1 = 3000;
    int max_steps_phase2 = 3000;
    int max_steps_phase3 = 3000;
    bool via_interval = false;   // replicate the interval argument in phase 1
    std::uint64_t seed = 0;      // informational, copied into the report
};

// q(eps) = (1 - eps) / (4 sqrt(eps)); the case-a growth factor.
double q_factor(double eps);

// (N_a, N_b) = (ceil(4 + 3 |ln(eps/r^2)|), ceil(|log2 sqrt(eps)|)).
std::pair<int, int> budget_bounds(double eps, double r);

// Full three-phase run on a planar star body. Rescales to mean width 1,
// derives eps_internal = min(eps^2/16, eps/25), runs phases 1-3 and
// asserts the final sandwich within the raster tolerance.
RunReport run_theorem(const StarBody2D& K, double eps, Strategy& strategy,
                      const PipelineConfig& cfg);

// Phase 3 in isolation (case-a / case-b loops with their per-step
// assertions). Preconditions: r = inner radius > 0, net containment at
// params.eps_internal, eps_internal < 1/25.
struct Phase3Result {
    int n3a = 0, n3b = 0;
    StarBody2D body{};
    bool budget_warning = false;
};
Phase3Result phase3_grow_ball(StarBody2D K, Strategy& strategy, const LemmaParams& params,
                              int G, int max_steps, std::vector<StepRecord>* trace = nullptr);

// Phase 1 in isolation on a support body (the dimension-scaling mode):
// symmetrize an interval of mean width 1 until min h >= c2 / sqrt(n).
struct IntervalPhase1Result {
    int steps = 0;
    double final_min_h = 0.0;
};
IntervalPhase1Result phase1_interval_nd(int n, Strategy& strategy, double c2,
                                        int cloud_M, int max_steps);

// Step CSV: one row per step plus a trailing summary comment.
// No timestamps; identical runs serialize byte-identically.
void write_step_csv(std::ostream& os, const RunReport& rep);
std::string step_csv_string(const RunReport& rep);

}  // namespace minksym
