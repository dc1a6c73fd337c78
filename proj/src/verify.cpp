#include "minksym/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "minksym/oracle.hpp"
#include "minksym/pipeline.hpp"
#include "minksym/schedule.hpp"
#include "minksym/support_nd.hpp"

namespace minksym::verify {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

bool all_pass(const std::vector<PropertyResult>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const auto& r) { return r.pass; });
}

StarBody2D gen_sandwiched(std::uint64_t seed, int m, double eps) {
    SeedStream rng(seed);
    // enough spikes that the tip polygon's inradius clears 1 - eps
    int spikes = std::max(48, static_cast<int>(std::ceil(
        std::numbers::pi / std::acos((1.0 - eps) / (1.0 + eps)))) * 3);
    spikes = std::min(spikes, m / 4);
    double gap_half = std::numbers::pi / spikes;  // worst half-gap after jitter bound below
    double smin = (1.0 - eps) / std::cos(2.0 * gap_half);
    std::vector<double> r(m);
    for (auto& v : r) v = 0.1 + 0.7 * (1.0 - eps) * rng.uniform();
    for (int s = 0; s < spikes; ++s) {
        int base = static_cast<int>(static_cast<long long>(s) * m / spikes);
        int jitter = static_cast<int>(rng.uniform_int(std::max(1, m / (4 * spikes))));
        int idx = (base + jitter) % m;
        r[idx] = smin + (1.0 + eps - smin) * rng.uniform();
    }
    StarBody2D K = make_star(m, std::move(r));
    // sandwich precondition, via support extrema on the grid
    double hmin = 1e300;
    for (int i = 0; i < m; ++i) hmin = std::min(hmin, support_eval(K, K.theta(i)));
    if (hmin < 1.0 - eps || outer_radius(K) > 1.0 + eps)
        return gen_sandwiched(seed * 6364136223846793005ULL + 1442695040888963407ULL, m, eps);
    return K;
}

std::vector<PropertyResult> lemma2_suite(int bodies) {
    std::vector<PropertyResult> out;
    for (double eps : {0.04, 0.01}) {
        int failures = 0;
        std::string first_bad;
        for (int s = 0; s < bodies; ++s) {
            StarBody2D K = gen_sandwiched(1000 + s, 720, eps);
            if (!net_contained(K, eps)) {
                ++failures;
                if (first_bad.empty())
                    first_bad = "seed=" + std::to_string(1000 + s) +
                                " dist=" + fmt(net_max_dist(K, eps)) +
                                " allowed=" + fmt(2.0 * std::sqrt(eps));
            }
        }
        std::ostringstream name;
        name << "lemma2.net_containment[eps=" << eps << "]";
        out.push_back({name.str(), failures == 0,
                       failures == 0 ? std::to_string(bodies) + " bodies, zero failures"
                                     : std::to_string(failures) + " failures, first: " + first_bad});
    }
    return out;
}

std::vector<PropertyResult> lemma4_suite(int G) {
    std::vector<PropertyResult> out;

    double q0 = q_factor(1.0 / 25.0);
    out.push_back({"lemma4.q(1/25)=6/5", std::abs(q0 - 1.2) <= 1e-15, "q = " + fmt(q0)});

    // budget formulas vs independently written arithmetic
    {
        SeedStream rng(42);
        bool ok = true;
        std::string bad;
        for (int i = 0; i < 10; ++i) {
            double eps = 1e-4 + (1.0 / 25.0 - 2e-4) * rng.uniform();
            double r = 0.01 + 0.98 * rng.uniform();
            auto [na, nb] = budget_bounds(eps, r);
            // |ln x| via log10, |log2 sqrt| via ln/(2 ln 2)
            int na_ref = static_cast<int>(std::ceil(
                4.0 + 3.0 * std::abs(std::log10(eps / (r * r))) * std::numbers::ln10));
            int nb_ref = static_cast<int>(std::ceil(std::abs(std::log(eps)) / (2.0 * std::numbers::ln2)));
            if (na != na_ref || nb != nb_ref) {
                ok = false;
                bad = "eps=" + fmt(eps) + " r=" + fmt(r);
                break;
            }
        }
        out.push_back({"lemma4.budget_formulas", ok, ok ? "10 random (eps, r) pairs" : bad});
    }

    // phase-3 runs: per-step inequalities are asserted inside phase3_grow_ball
    {
        bool ok = true;
        std::string detail;
        int runs = 0;
        for (double eps : {1.0 / 36.0, 1.0 / 64.0, 1.0 / 100.0}) {
            for (double r0 : {0.08, 0.5 * std::sqrt(eps), 2.0 * std::sqrt(eps) + 0.02}) {
                StarBody2D K = gen_spiky(720, 90, 0.98, r0);
                if (!net_contained(K, eps)) {
                    ok = false;
                    detail = "precondition construction failed at eps=" + fmt(eps);
                    break;
                }
                Strategy strat = Strategy::grid_random_2d(7 + runs, 720);
                LemmaParams params{eps, eps, 1.0 / 25.0, r0, 2};
                try {
                    Phase3Result res = phase3_grow_ball(K, strat, params, G, 500);
                    ++runs;
                    int nb_cap = static_cast<int>(std::ceil(std::abs(std::log2(std::sqrt(eps))))) + 1;
                    if (res.n3b > nb_cap) {
                        ok = false;
                        detail = "N3b=" + std::to_string(res.n3b) + " > cap " + std::to_string(nb_cap) +
                                 " at eps=" + fmt(eps) + " r0=" + fmt(r0);
                    }
                } catch (const std::exception& e) {
                    ok = false;
                    detail = std::string(e.what()) + " (eps=" + fmt(eps) + " r0=" + fmt(r0) + ")";
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        out.push_back({"lemma4.phase3_per_step", ok,
                       ok ? std::to_string(runs) + " phase-3 runs, zero violations" : detail});
    }
    return out;
}

std::vector<PropertyResult> conservation_suite(int steps, int G) {
    std::vector<PropertyResult> out;
    SeedStream rng(2024);
    const int m = 360;

    bool cons_ok = true, mono_in_ok = true, mono_out_ok = true;
    std::string cons_bad, mono_in_bad, mono_out_bad;
    double worst_drift = 0.0;
    for (int s = 0; s < steps; ++s) {
        StarBody2D K = [&]() -> StarBody2D {
            switch (s % 4) {
                case 0: return gen_random_star(100 + s, m, 0.2, 1.0);
                case 1: return gen_spiky(m, 8 + static_cast<int>(rng.uniform_int(16)), 1.0, 0.2);
                case 2: return gen_cross(m, 1.0, 0.1 + 0.3 * rng.uniform());
                default: return gen_random_star(200 + s, m, 0.05, 0.6);
            }
        }();
        GridAngle a{static_cast<int>(rng.uniform_int(m))};
        double mw0 = mean_width(K), in0 = inner_radius(K), out0 = outer_radius(K);
        SumResult r = symmetral(K, a, G);
        double mw1 = mean_width(r.body);
        worst_drift = std::max(worst_drift, std::abs(mw1 - mw0) / r.tau);
        if (std::abs(mw1 - mw0) > r.tau && cons_ok) {
            cons_ok = false;
            cons_bad = "step " + std::to_string(s) + ": |dM*| = " + fmt(std::abs(mw1 - mw0)) +
                       " > tau = " + fmt(r.tau);
        }
        if (inner_radius(r.body) < in0 - r.tau && mono_in_ok) {
            mono_in_ok = false;
            mono_in_bad = "step " + std::to_string(s);
        }
        if (outer_radius(r.body) > out0 + r.tau && mono_out_ok) {
            mono_out_ok = false;
            mono_out_bad = "step " + std::to_string(s);
        }
    }
    out.push_back({"conservation.mean_width_raster", cons_ok,
                   cons_ok ? "worst |dM*|/tau = " + fmt(worst_drift) : cons_bad});
    out.push_back({"monotone.inner_radius", mono_in_ok, mono_in_ok ? "all steps" : mono_in_bad});
    out.push_back({"monotone.outer_radius", mono_out_ok, mono_out_ok ? "all steps" : mono_out_bad});

    // exact 2D support mode: drift <= 1e-12 per step
    {
        SupportBody H = support_body_from_star(gen_random_star(31, 720, 0.2, 1.0));
        SeedStream arng(7);
        bool ok = true;
        double worst = 0.0;
        for (int s = 0; s < steps; ++s) {
            double mw0 = mean_width(H);
            H = symmetral_support(H, Direction::from_angle(
                kTwoPi * static_cast<double>(arng.uniform_int(720)) / 720.0));
            double d = std::abs(mean_width(H) - mw0);
            worst = std::max(worst, d);
            if (d > 1e-12) ok = false;
        }
        out.push_back({"conservation.mean_width_support_exact", ok, "worst per-step drift = " + fmt(worst)});
    }
    return out;
}

std::vector<PropertyResult> oracle_suite(int pairs, int G_fast, int G_naive) {
    bool ok = true;
    std::string bad;
    double worst_ratio = 0.0;
    // m chosen so the grid's angular spacing stays well above the coarse
    // raster's angular resolution; otherwise pointwise radial comparison
    // is ill-conditioned wherever the radial function is steep
    for (int s = 0; s < pairs; ++s) {
        StarBody2D A = gen_random_star(500 + 2 * s, 64, 0.2, 1.0);
        StarBody2D B = gen_random_star(501 + 2 * s, 64, 0.2, 1.0);
        StarBody2D fast = minkowski_sum(A, B, G_fast).body;
        StarBody2D naive = oracle::naive_minkowski_sum(A, B, G_naive);
        double coarse_cell = 2.0 * (outer_radius(A) + outer_radius(B)) / G_naive;
        double sup = 0.0;
        for (int i = 0; i < fast.m; ++i) sup = std::max(sup, std::abs(fast.r[i] - naive.r[i]));
        worst_ratio = std::max(worst_ratio, sup / coarse_cell);
        if (sup > 4.0 * coarse_cell) {
            ok = false;
            bad = "pair seed " + std::to_string(500 + 2 * s) + ": sup = " + fmt(sup) +
                  " > 4 * " + fmt(coarse_cell);
            break;
        }
    }
    return {{"oracle.sum_agreement", ok,
             ok ? std::to_string(pairs) + " pairs, worst sup/cell = " + fmt(worst_ratio) : bad}};
}

std::vector<PropertyResult> commutation_suite(int cases, int G) {
    bool ok = true;
    std::string bad;
    double worst = 0.0;
    const int m = 360;
    for (int s = 0; s < cases; ++s) {
        StarBody2D K = gen_random_star(900 + s, m, 0.2, 1.0);
        SeedStream rng(s);
        GridAngle a{static_cast<int>(rng.uniform_int(m))};
        SumResult r = symmetral(K, a, G);
        StarBody2D RK = reflect_body(K, a);
        for (int i = 0; i < m; ++i) {
            double lhs = support_eval(r.body, K.theta(i));
            double rhs = 0.5 * (support_eval(K, K.theta(i)) + support_eval(RK, K.theta(i)));
            double d = std::abs(lhs - rhs);
            worst = std::max(worst, d / r.tau);
            if (d > r.tau) {
                ok = false;
                bad = "case " + std::to_string(s) + " dir " + std::to_string(i) +
                      ": |dh| = " + fmt(d) + " > tau = " + fmt(r.tau);
                break;
            }
        }
        if (!ok) break;
    }
    return {{"commutation.conv_symmetral", ok,
             ok ? std::to_string(cases) + " cases, worst |dh|/tau = " + fmt(worst) : bad}};
}

}  // namespace minksym::verify
