// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Independent of doctest so the output stays a plain checklist.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "minksym/experiment.hpp"
#include "minksym/oracle.hpp"
#include "minksym/pipeline.hpp"
#include "minksym/star2d.hpp"
#include "minksym/verify.hpp"

using namespace minksym;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string suite_detail(const std::vector<verify::PropertyResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return r.name + ": " + r.detail;
    return "";
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    // 1. fast vs naive Minkowski sum oracle, 50 pairs, <= 4 coarse cells
    {
        auto t0 = std::chrono::steady_clock::now();
        auto rs = verify::oracle_suite(50, 1024, 128);
        double secs = elapsed(t0);
        bool pass = verify::all_pass(rs) && secs <= 120.0;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1fs", secs);
        report(1, "oracle equivalence (50 pairs, <= 4 coarse cells)", pass,
               pass ? buf : suite_detail(rs) + " " + buf);
    }

    // 2 & 3. conservation + monotonicity over 200 random steps (one battery)
    {
        auto rs = verify::conservation_suite(200, 256);
        bool cons = true, mono = true;
        for (const auto& r : rs) {
            if (!r.pass) {
                if (r.name.find("monoton") != std::string::npos) mono = false;
                else cons = false;
            }
        }
        report(2, "mean width conserved per step (raster <= tau, exact <= 1e-12)", cons,
               cons ? "" : suite_detail(rs));
        report(3, "rho_in nondecreasing / rho_out nonincreasing within tau", mono,
               mono ? "" : suite_detail(rs));
    }

    // 4. sandwiched hull forces net containment, 50 bodies x eps {0.04, 0.01}
    {
        auto rs = verify::lemma2_suite(50);
        report(4, "net containment for sandwiched bodies (zero failures)", verify::all_pass(rs),
               suite_detail(rs));
    }

    // 5. phase-3 per-step inequalities + q(1/25) = 6/5 exactly
    {
        bool q_exact = std::abs(q_factor(1.0 / 25.0) - 1.2) <= 1e-15;
        auto rs = verify::lemma4_suite(512);
        bool pass = q_exact && verify::all_pass(rs);
        report(5, "phase-3 case a/b inequalities, q(1/25) == 6/5", pass,
               q_exact ? suite_detail(rs) : "q(1/25) off by > 1e-15");
    }

    // 6. total steps scale like |log eps|: medians nondecreasing, bounded increments
    {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<double> epses = {0.2, 0.1, 0.05, 0.025};
        std::vector<std::uint64_t> seeds;
        for (std::uint64_t s = 1; s <= 20; ++s) seeds.push_back(s);
        PipelineConfig cfg;
        cfg.raster_G = 256;
        bool pass = true;
        std::string why;
        for (const char* name : {"cross", "spiky"}) {
            StarBody2D shape = std::string(name) == "cross" ? gen_cross(720, 1.0, 0.15)
                                                            : gen_spiky(720, 24, 1.0, 0.35);
            auto rows = sweep_star2d(shape, epses, seeds, cfg, 4);
            std::vector<double> med;
            for (double e : epses) {
                std::vector<double> totals;
                for (const auto& r : rows)
                    if (r.eps == e && r.status == "ok") totals.push_back(r.total);
                if (totals.size() < seeds.size()) {
                    pass = false;
                    why = std::string(name) + ": non-ok rows at eps=" + std::to_string(e);
                }
                med.push_back(totals.empty() ? 0.0 : median(totals));
            }
            for (size_t i = 1; i < med.size(); ++i) {
                if (med[i] < med[i - 1]) {
                    pass = false;
                    why = std::string(name) + ": median decreased between eps levels";
                }
                if (med[i] - med[i - 1] > 25.0) {
                    pass = false;
                    why = std::string(name) + ": increment " +
                          std::to_string(med[i] - med[i - 1]) + " > 25";
                }
            }
        }
        double secs = elapsed(t0);
        if (secs > 600.0) {
            pass = false;
            why = "over 10 min budget";
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1fs", secs);
        report(6, "median total steps ~ |log eps| (monotone, bounded increments)", pass,
               pass ? buf : why);
    }

    // 7. interval phase-1 counts scale linearly in n
    {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<int> ns = {2, 3, 4, 5, 6, 7, 8};
        std::vector<std::uint64_t> seeds;
        for (std::uint64_t s = 1; s <= 20; ++s) seeds.push_back(s);
        auto rows = sweep_interval_nd(ns, seeds, 0.2, 1024, 4000, 4);
        bool pass = true;
        std::string why;
        double ratio2 = 0.0;
        for (int n : ns) {
            std::vector<double> counts;
            for (const auto& r : rows)
                if (r.n == n && r.status == "ok") counts.push_back(r.n1);
            if (counts.size() < seeds.size()) {
                pass = false;
                why = "non-ok rows at n=" + std::to_string(n);
                break;
            }
            double ratio = median(counts) / n;
            if (n == 2) ratio2 = ratio;
            else if (ratio > 2.0 * ratio2) {
                pass = false;
                why = "N1(n)/n = " + std::to_string(ratio) + " > 2x the n=2 value " +
                      std::to_string(ratio2);
            }
        }
        double secs = elapsed(t0);
        if (secs > 300.0) {
            pass = false;
            why = "over 5 min budget";
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1fs", secs);
        report(7, "phase-1 interval counts: N1(n)/n within 2x of n=2", pass, pass ? buf : why);
    }

    // 8. sqrt(2 pi n) M*([0,u]) -> 1 from above; 2D segment M* vs 1/pi
    {
        bool pass = true;
        std::string why;
        double prev = 1e300;
        for (int n = 3; n <= 16; ++n) {
            double v = std::sqrt(2.0 * std::numbers::pi * n) * oracle::interval_mean_width(n);
            if (std::abs(v - 1.0) > 0.2 || v >= prev) {
                pass = false;
                why = "asymptotic violated at n=" + std::to_string(n);
            }
            prev = v;
        }
        StarBody2D seg = gen_segment(720, 1.0, GridAngle{0});
        double mw = mean_width(seg);
        if (std::abs(mw - 1.0 / std::numbers::pi) > 1e-4) {
            pass = false;
            why = "segment mean width off by " +
                  std::to_string(std::abs(mw - 1.0 / std::numbers::pi));
        }
        report(8, "mean-width asymptotic within 0.2, segment M* within 1e-4 of 1/pi", pass, why);
    }

    // 9. conv commutes with the symmetral within tau, 50 cases
    {
        auto rs = verify::commutation_suite(50, 256);
        report(9, "support of symmetral == symmetrized support within tau",
               verify::all_pass(rs), suite_detail(rs));
    }

    // 10. byte-identical CSVs on replay (library path, plus CLI if provided)
    {
        bool pass = true;
        std::string why;
        StarBody2D K = gen_spiky(720, 16, 1.0, 0.3);
        PipelineConfig cfg;
        cfg.raster_G = 256;
        cfg.seed = 1234;
        Strategy s1 = Strategy::grid_random_2d(1234, 720);
        Strategy s2 = Strategy::grid_random_2d(1234, 720);
        RunReport r1 = run_theorem(K, 0.1, s1, cfg);
        RunReport r2 = run_theorem(K, 0.1, s2, cfg);
        if (step_csv_string(r1) != step_csv_string(r2)) {
            pass = false;
            why = "library replay differs";
        }
        if (pass && !cli.empty()) {
            std::string shape = "/tmp/minksym_acc_shape.txt";
            std::string c1 = "/tmp/minksym_acc_1.csv", c2 = "/tmp/minksym_acc_2.csv";
            {
                std::string cmd = "'" + cli + "' gen spiky --grid-m 720 --spikes 16 --rho 1 "
                                  "--base 0.3 --out " + shape;
                if (std::system(cmd.c_str()) != 0) {
                    pass = false;
                    why = "cli gen failed";
                }
            }
            for (const std::string& out : {c1, c2}) {
                if (!pass) break;
                std::string cmd = "'" + cli + "' run --shape " + shape +
                                  " --eps 0.1 --seed 77 --raster-G 256 --out " + out;
                if (std::system(cmd.c_str()) != 0) {
                    pass = false;
                    why = "cli run failed";
                }
            }
            if (pass) {
                std::string a = slurp(c1), b = slurp(c2);
                if (a.empty() || a != b) {
                    pass = false;
                    why = "cli replay differs";
                }
            }
            std::remove(shape.c_str());
            std::remove(c1.c_str());
            std::remove(c2.c_str());
        }
        report(10, "fixed-seed replay produces byte-identical CSVs", pass, why);
    }

    if (g_failures == 0) {
        std::printf("all 10 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
