#include "minksym/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

namespace minksym {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// One symmetrization of the star body with its exact hull companion.
struct StarRunState {
    StarBody2D K;
    SupportBody hull;  // exact support averaging; tracks conv K by commutation
    int G = 0;
    double eps_internal = 0.0;
    double tau = 0.0;  // tolerance of the latest raster step
    int step = 0;
    std::vector<StepRecord> steps;

    double rho_in() const { return inner_radius(K); }
    double rho_out() const { return outer_radius(K); }

    void do_step(int phase, GridAngle a) {
        const double pre_in = rho_in();
        const double pre_out = rho_out();
        const double pre_mw = mean_width(K);
        SumResult s = symmetral(K, a, G);
        tau = s.tau;
        K = std::move(s.body);
        hull = symmetral_support(hull, Direction::from_angle(kTwoPi * a.k / K.m));

        const double post_in = rho_in();
        const double post_out = rho_out();
        const double post_mw = mean_width(K);
        if (post_in < pre_in - tau)
            throw InvariantViolation("inner radius decreased beyond tau at step " +
                                     std::to_string(step) + ": " + fmt(pre_in) + " -> " + fmt(post_in));
        if (post_out > pre_out + tau)
            throw InvariantViolation("outer radius increased beyond tau at step " +
                                     std::to_string(step) + ": " + fmt(pre_out) + " -> " + fmt(post_out));
        if (std::abs(post_mw - pre_mw) > tau)
            throw InvariantViolation("mean width drifted beyond tau at step " +
                                     std::to_string(step) + ": |" + fmt(post_mw) + " - " + fmt(pre_mw) + "|");

        StepRecord rec;
        rec.step = step++;
        rec.phase = phase;
        rec.angle = kTwoPi * a.k / K.m;
        rec.rho_in = post_in;
        rec.rho_out = post_out;
        rec.mean_width = post_mw;
        double rd = 0.0;
        for (double v : K.r) rd = std::max(rd, std::abs(v - 1.0));
        rec.raddist = rd;
        rec.net = net_max_dist(K, eps_internal) <= 2.0 * std::sqrt(eps_internal);
        rec.tau = tau;
        steps.push_back(rec);
    }
};

}  // namespace

double q_factor(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("q_factor: eps in (0,1) required");
    return (1.0 - eps) / (4.0 * std::sqrt(eps));
}

std::pair<int, int> budget_bounds(double eps, double r) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("budget_bounds: eps in (0,1) required");
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("budget_bounds: r in (0,1) required");
    int na = static_cast<int>(std::ceil(4.0 + 3.0 * std::abs(std::log(eps / (r * r)))));
    int nb = static_cast<int>(std::ceil(std::abs(std::log2(std::sqrt(eps)))));
    return {na, nb};
}

Phase3Result phase3_grow_ball(StarBody2D K, Strategy& strategy, const LemmaParams& params,
                              int G, int max_steps, std::vector<StepRecord>* trace) {
    const double eps = params.eps_internal;
    if (!(eps > 0.0 && eps < params.eps0))
        throw std::invalid_argument("phase3: eps_internal in (0, 1/25) required");
    if (!(inner_radius(K) > 0.0)) throw std::invalid_argument("phase3: inner radius must be positive");

    StarRunState st;
    st.K = std::move(K);
    st.G = G;
    st.eps_internal = eps;
    st.hull = support_body_from_star(st.K);
    const double sqrt_eps = std::sqrt(eps);
    const double target = 1.0 - 4.0 * sqrt_eps;
    const double q = q_factor(eps);
    Phase3Result out;

    // case a: multiply the inner radius by at least q(eps) until 2 sqrt(eps)
    while (st.rho_in() < 2.0 * sqrt_eps) {
        if (out.n3a + out.n3b >= max_steps)
            throw BudgetExhausted("phase3 case a: step budget exhausted at rho_in = " + fmt(st.rho_in()));
        double pre = st.rho_in();
        st.do_step(3, strategy.next_grid_angle());
        ++out.n3a;
        if (st.rho_in() < q * pre - st.tau)
            throw InvariantViolation("phase3 case a: rho_in' >= q*rho_in - tau violated: " +
                                     fmt(st.rho_in()) + " < " + fmt(q * pre) + " - " + fmt(st.tau));
    }
    // case b: the gap to 1 - (2 sqrt(eps) + eps) at least halves per step
    const double ceiling = 1.0 - (2.0 * sqrt_eps + eps);
    while (st.rho_in() < target - st.tau) {
        if (out.n3a + out.n3b >= max_steps)
            throw BudgetExhausted("phase3 case b: step budget exhausted at rho_in = " + fmt(st.rho_in()));
        double pre = st.rho_in();
        st.do_step(3, strategy.next_grid_angle());
        ++out.n3b;
        double bound = 0.5 * (ceiling + pre) - st.tau;
        if (st.rho_in() < bound)
            throw InvariantViolation("phase3 case b: rho_in' >= ((1-(2*sqrt(eps)+eps))+rho_in)/2 - tau violated: " +
                                     fmt(st.rho_in()) + " < " + fmt(bound));
    }

    auto [na, nb] = budget_bounds(eps, std::clamp(params.r, 1e-9, 1.0 - 1e-12));
    out.budget_warning = out.n3a > 2 * na || out.n3b > 2 * nb;
    if (trace)
        trace->insert(trace->end(), st.steps.begin(), st.steps.end());
    out.body = std::move(st.K);
    return out;
}

RunReport run_theorem(const StarBody2D& K0, double eps, Strategy& strategy,
                      const PipelineConfig& cfg) {
    if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("run_theorem: eps in (0, 1/2) required");
    const auto t0 = std::chrono::steady_clock::now();

    RunReport rep;
    rep.eps = eps;
    rep.seed = cfg.seed;
    rep.m0 = mean_width(K0);
    if (!(rep.m0 > 0.0)) throw std::invalid_argument("run_theorem: mean width must be positive");
    // the paper's final radius is 1 - 4 sqrt(eps_int); the quadratic
    // substitution makes that equal 1 - eps, the 1/25 cap keeps phase 3 valid
    const double eps_int = std::min(eps * eps / 16.0, eps / 25.0);
    rep.eps_internal = eps_int;

    StarRunState st;
    st.K = scale(K0, 1.0 / rep.m0);
    st.G = cfg.raster_G;
    st.eps_internal = eps_int;
    st.hull = support_body_from_star(st.K);
    st.tau = 4.0 * (4.0 * st.rho_out()) / cfg.raster_G;
    const int n = 2;

    // phase 1: seed a ball of radius c2 / sqrt(n)
    const double p1_target = cfg.c2 / std::sqrt(static_cast<double>(n));
    if (cfg.via_interval) {
        // Lemma-replication mode: the enclosing-radius interval is driven by
        // the same directions; its inner radius lower-bounds the body's.
        int kmax = static_cast<int>(std::max_element(st.K.r.begin(), st.K.r.end()) - st.K.r.begin());
        IntervalBody I0{st.rho_out(), Direction::from_angle(kTwoPi * kmax / st.K.m)};
        SupportBody HI = support_body_from_interval(I0, sphere_quadrature(2, st.K.m));
        const double itarget = (1.0 - 1.0 / std::numbers::e) * mean_width(HI);
        while (sandwich_radii(HI).first < itarget) {
            if (rep.n1 >= cfg.max_steps_phase1)
                throw BudgetExhausted("phase1 (via interval): budget exhausted at rho_in = " +
                                      fmt(st.rho_in()));
            GridAngle a = strategy.next_grid_angle();
            st.do_step(1, a);
            HI = symmetral_support(HI, Direction::from_angle(kTwoPi * a.k / st.K.m));
            ++rep.n1;
            if (st.rho_in() < sandwich_radii(HI).first - st.tau)
                throw InvariantViolation("via-interval: body inner radius fell below the interval's");
        }
        rep.interval_rho_in = sandwich_radii(HI).first;
    } else {
        while (st.rho_in() < p1_target) {
            if (rep.n1 >= cfg.max_steps_phase1)
                throw BudgetExhausted("phase1: budget exhausted at rho_in = " + fmt(st.rho_in()));
            st.do_step(1, strategy.next_grid_angle());
            ++rep.n1;
        }
    }

    // phase 2: round conv K until its exact support sandwich is within eps_int
    StopRule p2_stop = StopRule::sandwich_within(eps_int) || StopRule::max_steps(cfg.max_steps_phase2);
    auto hull_metrics = [&] {
        auto [lo, hi] = sandwich_radii(st.hull);
        return StepMetrics{rep.n2, lo, hi};
    };
    double mw0 = mean_width(st.hull);
    while (!p2_stop.should_stop(hull_metrics())) {
        st.do_step(2, strategy.next_grid_angle());
        ++rep.n2;
        if (std::abs(mean_width(st.hull) - mw0) > 1e-9)
            throw InvariantViolation("phase2: exact hull mean width drifted beyond 1e-9");
    }
    {
        auto [lo, hi] = sandwich_radii(st.hull);
        if (lo < 1.0 - eps_int || hi > 1.0 + eps_int)
            throw BudgetExhausted("phase2: budget exhausted with hull sandwich (" + fmt(lo) + ", " + fmt(hi) + ")");
        // Lemma: a sandwiched hull forces net containment; tau covers the raster
        if (!net_contained(st.K, eps_int, st.tau))
            throw InvariantViolation("phase2: net containment violated after hull sandwich (dist = " +
                                     fmt(net_max_dist(st.K, eps_int)) + ", allowance = " +
                                     fmt(2.0 * std::sqrt(eps_int) + st.tau) + ")");
    }

    // phase 3: grow the inner ball to 1 - 4 sqrt(eps_int) = 1 - eps
    LemmaParams params{eps, eps_int, 1.0 / 25.0, st.rho_in(), n};
    {
        auto [na, nb] = budget_bounds(eps_int, std::clamp(params.r, 1e-9, 1.0 - 1e-12));
        rep.budget_na = na;
        rep.budget_nb = nb;
    }
    const double sqrt_eps = std::sqrt(eps_int);
    const double q = q_factor(eps_int);
    const double ceiling = 1.0 - (2.0 * sqrt_eps + eps_int);
    while (st.rho_in() < 2.0 * sqrt_eps) {
        if (rep.n3a + rep.n3b >= cfg.max_steps_phase3)
            throw BudgetExhausted("phase3 case a: budget exhausted at rho_in = " + fmt(st.rho_in()));
        double pre = st.rho_in();
        st.do_step(3, strategy.next_grid_angle());
        ++rep.n3a;
        if (st.rho_in() < q * pre - st.tau)
            throw InvariantViolation("phase3 case a: rho_in' >= q*rho_in - tau violated");
    }
    while (st.rho_in() < 1.0 - 4.0 * sqrt_eps - st.tau) {
        if (rep.n3a + rep.n3b >= cfg.max_steps_phase3)
            throw BudgetExhausted("phase3 case b: budget exhausted at rho_in = " + fmt(st.rho_in()));
        double pre = st.rho_in();
        st.do_step(3, strategy.next_grid_angle());
        ++rep.n3b;
        if (st.rho_in() < 0.5 * (ceiling + pre) - st.tau)
            throw InvariantViolation("phase3 case b: halving inequality violated");
    }
    rep.budget_warning = rep.n3a > 2 * rep.budget_na || rep.n3b > 2 * rep.budget_nb;

    rep.rho_in_final = st.rho_in();
    rep.rho_out_final = st.rho_out();
    if (rep.rho_in_final < 1.0 - eps - st.tau || rep.rho_out_final > 1.0 + eps + st.tau)
        throw InvariantViolation("final sandwich (1-eps, 1+eps) violated beyond tau: (" +
                                 fmt(rep.rho_in_final) + ", " + fmt(rep.rho_out_final) + ")");

    rep.steps = std::move(st.steps);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

IntervalPhase1Result phase1_interval_nd(int n, Strategy& strategy, double c2,
                                        int cloud_M, int max_steps) {
    if (n < 2) throw std::invalid_argument("phase1_interval_nd: n >= 2 required");
    SphereQuadrature cloud = sphere_quadrature(n, cloud_M);
    Vec e1(n, 0.0);
    e1[0] = 1.0;
    SupportBody H = support_body_from_interval(IntervalBody{1.0, Direction{e1}}, std::move(cloud));
    H = scale(H, 1.0 / mean_width(H));  // normalize to mean width 1

    const double target = c2 / std::sqrt(static_cast<double>(n));
    IntervalPhase1Result out;
    double lo = *std::min_element(H.h.begin(), H.h.end());
    while (lo < target) {
        if (out.steps >= max_steps)
            throw BudgetExhausted("phase1_interval_nd: budget exhausted at min h = " + fmt(lo));
        H = symmetral_support(H, strategy.next_direction(n));
        ++out.steps;
        lo = *std::min_element(H.h.begin(), H.h.end());
    }
    out.final_min_h = lo;
    return out;
}

void write_step_csv(std::ostream& os, const RunReport& rep) {
    os << "step,phase,angle,rho_in,rho_out,mean_width,raddist,net,tau\n";
    for (const auto& s : rep.steps) {
        os << s.step << ',' << s.phase << ',' << fmt(s.angle) << ',' << fmt(s.rho_in) << ','
           << fmt(s.rho_out) << ',' << fmt(s.mean_width) << ',' << fmt(s.raddist) << ','
           << (s.net ? 1 : 0) << ',' << fmt(s.tau) << '\n';
    }
    os << "# summary n1=" << rep.n1 << " n2=" << rep.n2 << " n3a=" << rep.n3a << " n3b=" << rep.n3b
       << " budget_na=" << rep.budget_na << " budget_nb=" << rep.budget_nb
       << " rho_in=" << fmt(rep.rho_in_final) << " rho_out=" << fmt(rep.rho_out_final)
       << " m0=" << fmt(rep.m0) << " eps=" << fmt(rep.eps) << " eps_internal=" << fmt(rep.eps_internal)
       << " seed=" << rep.seed << " budget_warning=" << (rep.budget_warning ? 1 : 0) << '\n';
}

std::string step_csv_string(const RunReport& rep) {
    std::ostringstream os;
    write_step_csv(os, rep);
    return os.str();
}

}  // namespace minksym
