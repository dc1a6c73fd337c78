#include "minksym/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <thread>

#include "minksym/schedule.hpp"

namespace minksym {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void run_parallel(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<SweepRow> sweep_star2d(const StarBody2D& shape, const std::vector<double>& epses,
                                   const std::vector<std::uint64_t>& seeds,
                                   const PipelineConfig& cfg, int jobs) {
    struct Job {
        double eps;
        std::uint64_t seed;
    };
    std::vector<Job> grid;
    for (double e : epses)
        for (auto s : seeds) grid.push_back({e, s});

    std::vector<SweepRow> rows(grid.size());
    run_parallel(grid.size(), jobs, [&](std::size_t i) {
        SweepRow& row = rows[i];
        row.n = 2;
        row.eps = grid[i].eps;
        row.seed = grid[i].seed;
        Strategy strat = Strategy::grid_random_2d(grid[i].seed, shape.m);
        PipelineConfig c = cfg;
        c.seed = grid[i].seed;
        try {
            RunReport rep = run_theorem(shape, grid[i].eps, strat, c);
            row.n1 = rep.n1;
            row.n2 = rep.n2;
            row.n3a = rep.n3a;
            row.n3b = rep.n3b;
            row.total = rep.total_steps();
            row.budget_na = rep.budget_na;
            row.budget_nb = rep.budget_nb;
            row.rho_in = rep.rho_in_final;
            row.rho_out = rep.rho_out_final;
        } catch (const InvariantViolation&) {
            row.status = "invariant";
        } catch (const BudgetExhausted&) {
            row.status = "budget";
        } catch (const std::exception&) {
            row.status = "error";
        }
    });
    return rows;
}

std::vector<SweepRow> sweep_interval_nd(const std::vector<int>& ns,
                                        const std::vector<std::uint64_t>& seeds, double c2,
                                        int cloud_M, int max_steps, int jobs) {
    struct Job {
        int n;
        std::uint64_t seed;
    };
    std::vector<Job> grid;
    for (int n : ns)
        for (auto s : seeds) grid.push_back({n, s});

    std::vector<SweepRow> rows(grid.size());
    run_parallel(grid.size(), jobs, [&](std::size_t i) {
        SweepRow& row = rows[i];
        row.n = grid[i].n;
        row.eps = 0.0;
        row.seed = grid[i].seed;
        try {
            Strategy strat = grid[i].n == 2 ? Strategy::grid_random_2d(grid[i].seed, cloud_M)
                                            : Strategy::uniform_random(grid[i].seed);
            IntervalPhase1Result res = phase1_interval_nd(grid[i].n, strat, c2, cloud_M, max_steps);
            row.n1 = res.steps;
            row.total = res.steps;
            row.rho_in = res.final_min_h;
        } catch (const BudgetExhausted&) {
            row.status = "budget";
        } catch (const std::exception&) {
            row.status = "error";
        }
    });
    return rows;
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    std::size_t k = v.size() / 2;
    return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

SweepFit fit_constants(const std::vector<SweepRow>& rows) {
    SweepFit fit;
    double sxy = 0.0, sxx = 0.0;
    std::vector<double> ratios;
    for (const auto& r : rows) {
        if (r.status != "ok") continue;
        if (r.eps > 0.0) {
            double x = r.n * std::abs(std::log(r.eps));
            sxy += x * r.total;
            sxx += x * x;
        } else {
            ratios.push_back(static_cast<double>(r.n1) / r.n);
        }
    }
    if (sxx > 0.0) fit.c_total = sxy / sxx;
    fit.c1_ratio = median(std::move(ratios));
    return fit;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, const SweepFit& fit) {
    os << "n,eps,seed,n1,n2,n3a,n3b,total,budget_na,budget_nb,rho_in,rho_out,status\n";
    for (const auto& r : rows) {
        os << r.n << ',' << fmt(r.eps) << ',' << r.seed << ',' << r.n1 << ',' << r.n2 << ','
           << r.n3a << ',' << r.n3b << ',' << r.total << ',' << r.budget_na << ',' << r.budget_nb
           << ',' << fmt(r.rho_in) << ',' << fmt(r.rho_out) << ',' << r.status << '\n';
    }
    os << "# fit c_total=" << fmt(fit.c_total) << " c1_ratio=" << fmt(fit.c1_ratio) << '\n';
}

}  // namespace minksym
