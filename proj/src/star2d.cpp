#include "minksym/star2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace minksym {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_pow2(int x) { return x > 0 && (x & (x - 1)) == 0; }

void check_body(const StarBody2D& K) {
    if (K.m < 8 || K.m % 2 != 0) throw std::invalid_argument("StarBody2D: m must be even and >= 8");
    if (static_cast<int>(K.r.size()) != K.m) throw std::invalid_argument("StarBody2D: r size != m");
    for (double v : K.r)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("StarBody2D: radial values must be finite and >= 0");
}

}  // namespace

double StarBody2D::theta(int i) const { return kTwoPi * i / m; }

StarBody2D make_star(int m, std::vector<double> r) {
    StarBody2D K{m, std::move(r)};
    check_body(K);
    return K;
}

double radial_eval(const StarBody2D& K, double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("radial_eval: non-finite angle");
    double t = theta / kTwoPi * K.m;
    t -= std::floor(t / K.m) * K.m;  // into [0, m)
    int i0 = static_cast<int>(std::floor(t));
    if (i0 >= K.m) i0 = 0;
    int i1 = (i0 + 1) % K.m;
    double f = t - i0;
    return K.r[i0] * (1.0 - f) + K.r[i1] * f;
}

StarBody2D reflect_body(const StarBody2D& K, GridAngle a) {
    check_body(K);
    if (K.m % 2 != 0) throw std::invalid_argument("reflect_body: grid not closed under reflection");
    StarBody2D out{K.m, std::vector<double>(K.m)};
    int base = 2 * a.k + K.m / 2;
    for (int i = 0; i < K.m; ++i) {
        int j = ((base - i) % K.m + K.m) % K.m;
        out.r[i] = K.r[j];
    }
    return out;
}

StarBody2D scale(const StarBody2D& K, double s) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw std::invalid_argument("scale: bad factor");
    StarBody2D out = K;
    for (auto& v : out.r) v *= s;
    return out;
}

Raster rasterize(const StarBody2D& K, int G, double halfside) {
    check_body(K);
    Raster R;
    R.G = G;
    R.halfside = halfside;
    R.cell = 2.0 * halfside / G;
    R.occ.assign(static_cast<std::size_t>(G) * G, 0);
    const double c0 = G / 2.0 - 0.5;  // cell center ix: x = (ix - c0) * cell
    // cell-center membership test
    for (int iy = 0; iy < G; ++iy) {
        double y = (iy - c0) * R.cell;
        for (int ix = 0; ix < G; ++ix) {
            double x = (ix - c0) * R.cell;
            double rho = std::hypot(x, y);
            if (rho < 1e-300) {
                R.occ[static_cast<std::size_t>(iy) * G + ix] = 1;
                continue;
            }
            double th = std::atan2(y, x);
            if (rho <= radial_eval(K, th))
                R.occ[static_cast<std::size_t>(iy) * G + ix] = 1;
        }
    }
    // march each grid ray so sub-cell spikes and segments stay occupied;
    // the origin cell is always marked (every star body contains 0).
    // A point on a cell boundary touches both cells: mark every cell whose
    // closed square contains the point, so axis-aligned thin bodies do not
    // collapse into a half-offset single row.
    auto mark = [&](double px, double py) {
        double fx = px / R.cell + c0, fy = py / R.cell + c0;
        int ix0 = static_cast<int>(std::lround(fx)), iy0 = static_cast<int>(std::lround(fy));
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                int ix = ix0 + dx, iy = iy0 + dy;
                if (std::abs(fx - ix) > 0.5 + 1e-9 || std::abs(fy - iy) > 0.5 + 1e-9) continue;
                if (ix >= 0 && ix < G && iy >= 0 && iy < G)
                    R.occ[static_cast<std::size_t>(iy) * G + ix] = 1;
            }
    };
    for (int i = 0; i < K.m; ++i) {
        double cx = std::cos(K.theta(i)), sy = std::sin(K.theta(i));
        double len = K.r[i];
        int steps = static_cast<int>(len / (R.cell * 0.5)) + 1;
        for (int s = 0; s <= steps; ++s) {
            double t = std::min(len, s * R.cell * 0.5);
            mark(cx * t, sy * t);
        }
    }
    return R;
}

// defined in fft_conv.cpp
std::vector<double> conv2d_counts(const std::vector<std::uint8_t>& a,
                                  const std::vector<std::uint8_t>& b, int G);

SumResult minkowski_sum(const StarBody2D& A, const StarBody2D& B, int G) {
    check_body(A);
    check_body(B);
    if (A.m != B.m) throw std::invalid_argument("minkowski_sum: grid sizes differ");
    if (!is_pow2(G) || G < 32) throw std::invalid_argument("minkowski_sum: G must be a power of two >= 32");

    const double halfside = outer_radius(A) + outer_radius(B);
    if (halfside == 0.0)  // {0} + {0}
        return SumResult{StarBody2D{A.m, std::vector<double>(A.m, 0.0)}, 0.0, 0.0};
    Raster RA = rasterize(A, G, halfside);
    Raster RB = rasterize(B, G, halfside);
    std::vector<double> counts = conv2d_counts(RA.occ, RB.occ, G);

    const int N = 2 * G;
    const double cell = RA.cell;
    // sum cell s has center position (s - G + 1) * cell per coordinate
    auto occupied = [&](double x, double y) {
        int sx = static_cast<int>(std::floor(x / cell + G - 0.5));
        int sy = static_cast<int>(std::floor(y / cell + G - 0.5));
        if (sx < 0 || sx >= N || sy < 0 || sy >= N) return false;
        return counts[static_cast<std::size_t>(sy) * N + sx] >= 0.5;
    };

    StarBody2D out{A.m, std::vector<double>(A.m, 0.0)};
    const double rmax = halfside;
    for (int i = 0; i < A.m; ++i) {
        double cx = std::cos(out.theta(i)), sy = std::sin(out.theta(i));
        double best = 0.0;
        int steps = static_cast<int>(rmax / (cell * 0.25)) + 1;
        for (int s = steps; s >= 0; --s) {
            double t = std::min(rmax, s * cell * 0.25);
            if (occupied(cx * t, sy * t)) {
                best = t;  // farthest occupied cell along the ray; sum is star-shaped
                break;
            }
        }
        out.r[i] = best;
    }
    return SumResult{std::move(out), 4.0 * cell, cell};
}

SumResult symmetral(const StarBody2D& K, GridAngle a, int G) {
    SumResult s = minkowski_sum(K, reflect_body(K, a), G);
    for (auto& v : s.body.r) v *= 0.5;  // exact
    return s;
}

double inner_radius(const StarBody2D& K) {
    return *std::min_element(K.r.begin(), K.r.end());
}

double outer_radius(const StarBody2D& K) {
    return *std::max_element(K.r.begin(), K.r.end());
}

double support_eval(const StarBody2D& K, double theta_d) {
    double best = 0.0;
    for (int i = 0; i < K.m; ++i)
        best = std::max(best, K.r[i] * std::cos(K.theta(i) - theta_d));
    return best;
}

double support_eval(const StarBody2D& K, const Direction& d) {
    if (d.dim() != 2) throw std::invalid_argument("support_eval: 2D direction required");
    double best = 0.0;
    for (int i = 0; i < K.m; ++i) {
        double s = K.r[i] * (std::cos(K.theta(i)) * d.u[0] + std::sin(K.theta(i)) * d.u[1]);
        best = std::max(best, s);
    }
    return best;
}

double mean_width(const StarBody2D& K) {
    double s = 0.0;
    for (int i = 0; i < K.m; ++i) s += support_eval(K, K.theta(i));
    return s / K.m;
}

double dist_to_body(const StarBody2D& K, double px, double py) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < K.m; ++j) {
        double tx = K.r[j] * std::cos(K.theta(j));
        double ty = K.r[j] * std::sin(K.theta(j));
        // point-to-segment distance, segment [0, tip]
        double len2 = tx * tx + ty * ty;
        double t = len2 > 0.0 ? std::clamp((px * tx + py * ty) / len2, 0.0, 1.0) : 0.0;
        double dx = px - t * tx, dy = py - t * ty;
        best = std::min(best, std::hypot(dx, dy));
    }
    return best;
}

double net_max_dist(const StarBody2D& K, double eps) {
    double worst = 0.0;
    for (int i = 0; i < K.m; ++i) {
        double px = (1.0 - eps) * std::cos(K.theta(i));
        double py = (1.0 - eps) * std::sin(K.theta(i));
        worst = std::max(worst, dist_to_body(K, px, py));
    }
    return worst;
}

bool net_contained(const StarBody2D& K, double eps, double slack) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("net_contained: eps in (0,1) required");
    return net_max_dist(K, eps) <= 2.0 * std::sqrt(eps) + slack;
}

StarBody2D gen_disc(int m, double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("gen_disc: rho > 0 required");
    return make_star(m, std::vector<double>(m, rho));
}

StarBody2D gen_segment(int m, double R, GridAngle a) {
    if (!(R > 0.0)) throw std::invalid_argument("gen_segment: R > 0 required");
    std::vector<double> r(m, 0.0);
    r[((a.k % m) + m) % m] = R;
    return make_star(m, std::move(r));
}

StarBody2D gen_spiky(int m, int spikes, double len, double base) {
    if (spikes < 1 || spikes > m) throw std::invalid_argument("gen_spiky: bad spike count");
    if (!(len > 0.0) || !(base >= 0.0) || base > len)
        throw std::invalid_argument("gen_spiky: need 0 <= base <= len, len > 0");
    std::vector<double> r(m, base);
    for (int s = 0; s < spikes; ++s) r[static_cast<int>(static_cast<long long>(s) * m / spikes)] = len;
    return make_star(m, std::move(r));
}

StarBody2D gen_cross(int m, double arm, double width) {
    if (!(arm > 0.0) || !(width > 0.0) || width > arm)
        throw std::invalid_argument("gen_cross: need 0 < width <= arm");
    std::vector<double> r(m);
    for (int i = 0; i < m; ++i) {
        double th = kTwoPi * i / m;
        double c = std::abs(std::cos(th)), s = std::abs(std::sin(th));
        auto bar = [&](double along, double across) {
            // radial extent of the bar {|x| <= arm, |y| <= width} at angle th
            double lim_a = along > 1e-15 ? arm / along : std::numeric_limits<double>::infinity();
            double lim_w = across > 1e-15 ? width / across : std::numeric_limits<double>::infinity();
            return std::min(lim_a, lim_w);
        };
        r[i] = std::max(bar(c, s), bar(s, c));
    }
    return make_star(m, std::move(r));
}

StarBody2D gen_random_star(std::uint64_t seed, int m, double lo, double hi) {
    if (!(lo >= 0.0) || !(hi > lo)) throw std::invalid_argument("gen_random_star: need 0 <= lo < hi");
    SeedStream rng(seed);
    std::vector<double> raw(m);
    for (auto& v : raw) v = lo + (hi - lo) * rng.uniform();
    // smooth until the radial slope is gentle at grid m, so the body stays
    // resolvable by the rasters it will be fed to
    std::vector<double> r = raw;
    for (int pass = 0; pass < 3; ++pass) {
        std::vector<double> next(m);
        for (int i = 0; i < m; ++i)
            next[i] = 0.25 * r[(i + m - 1) % m] + 0.5 * r[i] + 0.25 * r[(i + 1) % m];
        r.swap(next);
    }
    return make_star(m, std::move(r));
}

}  // namespace minksym
