#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "minksym/pipeline.hpp"

// Sweep fan-out over (eps, n, seed) grids with deterministic merge order,
// plus the empirical-constant fits reported alongside the raw rows.

namespace minksym {

struct SweepRow {
    int n = 2;
    double eps = 0.0;
    std::uint64_t seed = 0;
    int n1 = 0, n2 = 0, n3a = 0, n3b = 0, total = 0;
    int budget_na = 0, budget_nb = 0;
    double rho_in = 0.0, rho_out = 0.0;
    std::string status = "ok";  // ok | invariant | budget | error
};

// Full star-body runs, one per (eps, seed); n = 2.
std::vector<SweepRow> sweep_star2d(const StarBody2D& shape, const std::vector<double>& epses,
                                   const std::vector<std::uint64_t>& seeds,
                                   const PipelineConfig& cfg, int jobs);

// Interval phase-1 runs, one per (n, seed); counts go into n1.
std::vector<SweepRow> sweep_interval_nd(const std::vector<int>& ns,
                                        const std::vector<std::uint64_t>& seeds, double c2,
                                        int cloud_M, int max_steps, int jobs);

struct SweepFit {
    double c_total = 0.0;   // least squares total ~ C * n |log eps| (ok rows, eps > 0)
    double c1_ratio = 0.0;  // median n1 / n over interval rows
};
SweepFit fit_constants(const std::vector<SweepRow>& rows);

double median(std::vector<double> v);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, const SweepFit& fit);

}  // namespace minksym
