#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "minksym/experiment.hpp"
#include "minksym/oracle.hpp"
#include "minksym/pipeline.hpp"
#include "minksym/schedule.hpp"
#include "minksym/shape_io.hpp"
#include "minksym/verify.hpp"

// Experiment CLI. Exit codes: 0 success, 1 usage error, 2 invariant
// violation, 3 budget exhaustion.

namespace {

using namespace minksym;

std::string out_path(const std::string& requested) {
    if (requested.empty()) return requested;
    if (requested.find('/') != std::string::npos) return requested;
    if (const char* dir = std::getenv("MINKSYM_OUT_DIR"))
        return std::string(dir) + "/" + requested;
    return requested;
}

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

void print_summary(const StarBody2D& K) {
    std::printf("rho_in=%.12g rho_out=%.12g mean_width=%.12g m=%d\n", inner_radius(K),
                outer_radius(K), mean_width(K), K.m);
}

int cmd_gen(const std::string& kind, const std::string& out, int m, double rho, double R,
            int angle, int spikes, double len, double base, double arm, double width,
            std::uint64_t seed, double lo, double hi) {
    StarBody2D K = [&] {
        if (kind == "disc") return gen_disc(m, rho);
        if (kind == "segment") return gen_segment(m, R, GridAngle{angle});
        if (kind == "spiky") return gen_spiky(m, spikes, len, base);
        if (kind == "cross") return gen_cross(m, arm, width);
        if (kind == "random") return gen_random_star(seed, m, lo, hi);
        throw CLI::ValidationError("unknown generator '" + kind + "'");
    }();
    if (!out.empty()) save_shape(out_path(out), Shape{K});
    print_summary(K);
    return 0;
}

int cmd_run(const std::string& shape_path, double eps, std::uint64_t seed,
            const std::string& strategy, int grid_m, int raster_G, double c2,
            bool via_interval, int max_steps, const std::string& out) {
    Shape s = load_shape(shape_path);
    if (!std::holds_alternative<StarBody2D>(s)) {
        std::cerr << "run: radial (dim=2) shape required\n";
        return 1;
    }
    const StarBody2D& K = std::get<StarBody2D>(s);
    Strategy strat = strategy == "halving" ? Strategy::halving_angles_2d(K.m)
                                           : Strategy::grid_random_2d(seed, K.m);
    (void)grid_m;
    PipelineConfig cfg;
    cfg.raster_G = raster_G;
    cfg.c2 = c2;
    cfg.via_interval = via_interval;
    cfg.seed = seed;
    cfg.max_steps_phase1 = cfg.max_steps_phase2 = cfg.max_steps_phase3 = max_steps;
    try {
        RunReport rep = run_theorem(K, eps, strat, cfg);
        if (!out.empty()) {
            std::ofstream os(out_path(out), std::ios::binary);
            write_step_csv(os, rep);
        } else {
            write_step_csv(std::cout, rep);
        }
        std::fprintf(stderr, "total=%d (n1=%d n2=%d n3a=%d n3b=%d) sandwich=(%.6g, %.6g) wall=%.2fs%s\n",
                     rep.total_steps(), rep.n1, rep.n2, rep.n3a, rep.n3b, rep.rho_in_final,
                     rep.rho_out_final, rep.wall_seconds,
                     rep.budget_warning ? " [budget warning]" : "");
        if (via_interval)
            std::fprintf(stderr, "interval rho_in after phase 1: %.6g\n", rep.interval_rho_in);
        return 0;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    }
}

int cmd_sweep(const std::string& shape_path, const std::string& eps_csv, const std::string& n_csv,
              int nseeds, std::uint64_t seed0, int raster_G, double c2, int cloud_M,
              int max_steps, int jobs, const std::string& out) {
    std::vector<std::uint64_t> seeds;
    for (int i = 0; i < nseeds; ++i) seeds.push_back(seed0 + i);
    std::vector<int> ns = n_csv.empty() ? std::vector<int>{2} : parse_ints(n_csv);

    std::vector<SweepRow> rows;
    bool star_mode = ns.size() == 1 && ns[0] == 2 && !shape_path.empty();
    if (star_mode) {
        Shape s = load_shape(shape_path);
        if (!std::holds_alternative<StarBody2D>(s)) {
            std::cerr << "sweep: radial shape required for star mode\n";
            return 1;
        }
        PipelineConfig cfg;
        cfg.raster_G = raster_G;
        cfg.c2 = c2;
        cfg.max_steps_phase1 = cfg.max_steps_phase2 = cfg.max_steps_phase3 = max_steps;
        rows = sweep_star2d(std::get<StarBody2D>(s), parse_doubles(eps_csv), seeds, cfg, jobs);
    } else {
        rows = sweep_interval_nd(ns, seeds, c2, cloud_M, max_steps, jobs);
    }
    SweepFit fit = fit_constants(rows);
    if (!out.empty()) {
        std::ofstream os(out_path(out), std::ios::binary);
        write_sweep_csv(os, rows, fit);
    } else {
        write_sweep_csv(std::cout, rows, fit);
    }
    bool any_fail = false;
    for (const auto& r : rows)
        if (r.status != "ok") any_fail = true;
    return any_fail ? 2 : 0;
}

int cmd_verify(const std::string& suite) {
    std::vector<verify::PropertyResult> results;
    auto append = [&](std::vector<verify::PropertyResult> v) {
        results.insert(results.end(), v.begin(), v.end());
    };
    if (suite == "lemma2" || suite == "all") append(verify::lemma2_suite());
    if (suite == "lemma4" || suite == "all") append(verify::lemma4_suite());
    if (suite == "conservation" || suite == "all") append(verify::conservation_suite());
    if (suite == "oracle" || suite == "all") append(verify::oracle_suite());
    if (suite == "commutation" || suite == "all") append(verify::commutation_suite());
    if (results.empty()) {
        std::cerr << "verify: unknown suite '" << suite
                  << "' (lemma2|lemma4|conservation|oracle|commutation|all)\n";
        return 1;
    }
    bool ok = true;
    for (const auto& r : results) {
        std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        if (!r.pass) ok = false;
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minkowski symmetrization experiments on star-shaped bodies"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a shape file");
    std::string gen_kind, gen_out;
    int gen_m = 720, gen_angle = 0, gen_spikes = 12;
    double gen_rho = 1.0, gen_R = 1.0, gen_len = 1.0, gen_base = 0.2, gen_arm = 1.0,
           gen_width = 0.1, gen_lo = 0.2, gen_hi = 1.0;
    std::uint64_t gen_seed = 1;
    gen->add_option("generator", gen_kind, "disc|segment|spiky|cross|random")->required();
    gen->add_option("--grid-m", gen_m, "angle grid size (even)");
    gen->add_option("--rho", gen_rho, "disc radius");
    gen->add_option("--R", gen_R, "segment length");
    gen->add_option("--angle", gen_angle, "segment grid angle index");
    gen->add_option("--spikes", gen_spikes);
    gen->add_option("--len", gen_len, "spike length");
    gen->add_option("--base", gen_base, "base radius");
    gen->add_option("--arm", gen_arm, "cross arm length");
    gen->add_option("--width", gen_width, "cross half-width");
    gen->add_option("--seed", gen_seed);
    gen->add_option("--lo", gen_lo);
    gen->add_option("--hi", gen_hi);
    gen->add_option("--out", gen_out, "shape file path");

    // run
    auto* run = app.add_subcommand("run", "single three-phase run; step CSV out");
    std::string run_shape, run_out, run_strategy = "grid-random";
    double run_eps = 0.1, run_c2 = 0.2;
    int run_G = 1024, run_grid_m = 720, run_max_steps = 3000;
    std::uint64_t run_seed = 1;
    bool run_via_interval = false;
    run->add_option("--shape", run_shape)->required();
    run->add_option("--eps", run_eps)->required();
    run->add_option("--seed", run_seed);
    run->add_option("--strategy", run_strategy, "grid-random|halving");
    run->add_option("--grid-m", run_grid_m);
    run->add_option("--raster-G", run_G);
    run->add_option("--c2", run_c2, "phase-1 inner-radius coefficient");
    run->add_option("--max-steps", run_max_steps, "per-phase step budget");
    run->add_flag("--via-interval", run_via_interval, "replicate the interval argument in phase 1");
    run->add_option("--out", run_out,
                    "step CSV path (columns: step,phase,angle,rho_in,rho_out,"
                    "mean_width,raddist,net,tau; floats at 12 significant digits)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "grid of runs over eps x n x seeds; aggregate CSV");
    std::string sw_shape, sw_eps = "0.2,0.1,0.05", sw_n, sw_out;
    int sw_nseeds = 20, sw_G = 256, sw_cloud_M = 1024, sw_max_steps = 3000, sw_jobs = 1;
    double sw_c2 = 0.2;
    std::uint64_t sw_seed0 = 1;
    sweep->add_option("--shape", sw_shape, "radial shape file (star mode, n = 2)");
    sweep->add_option("--eps", sw_eps, "comma list of target accuracies");
    sweep->add_option("--n", sw_n, "comma list of dimensions (interval mode when != 2)");
    sweep->add_option("--seeds", sw_nseeds, "number of seeds (seed0, seed0+1, ...)");
    sweep->add_option("--seed0", sw_seed0);
    sweep->add_option("--raster-G", sw_G);
    sweep->add_option("--cloud-M", sw_cloud_M, "direction cloud size for interval mode");
    sweep->add_option("--c2", sw_c2);
    sweep->add_option("--max-steps", sw_max_steps);
    sweep->add_option("--jobs", sw_jobs, "worker pool size");
    sweep->add_option("--out", sw_out,
                      "aggregate CSV (one row per run: n,eps,seed,n1,n2,n3a,n3b,total,"
                      "budget_na,budget_nb,rho_in,rho_out,status; trailing fit line)");

    // verify
    auto* ver = app.add_subcommand("verify", "property batteries; pass/fail per property");
    std::string ver_suite;
    ver->add_option("suite", ver_suite, "lemma2|lemma4|conservation|oracle|commutation|all")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors are exit 1; --help stays 0
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_kind, gen_out, gen_m, gen_rho, gen_R, gen_angle, gen_spikes,
                           gen_len, gen_base, gen_arm, gen_width, gen_seed, gen_lo, gen_hi);
        if (run->parsed())
            return cmd_run(run_shape, run_eps, run_seed, run_strategy, run_grid_m, run_G, run_c2,
                           run_via_interval, run_max_steps, run_out);
        if (sweep->parsed())
            return cmd_sweep(sw_shape, sw_eps, sw_n, sw_nseeds, sw_seed0, sw_G, sw_c2, sw_cloud_M,
                             sw_max_steps, sw_jobs, sw_out);
        if (ver->parsed()) return cmd_verify(ver_suite);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
