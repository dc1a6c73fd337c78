#include "minksym/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace minksym::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// own rasterizer: cell-center membership plus ray marching
std::vector<std::uint8_t> occupancy(const StarBody2D& K, int G, double halfside) {
    std::vector<std::uint8_t> occ(static_cast<std::size_t>(G) * G, 0);
    const double cell = 2.0 * halfside / G;
    const double c0 = G / 2.0 - 0.5;
    for (int iy = 0; iy < G; ++iy) {
        for (int ix = 0; ix < G; ++ix) {
            double x = (ix - c0) * cell, y = (iy - c0) * cell;
            double rho = std::hypot(x, y);
            double th = std::atan2(y, x);
            if (rho <= radial_eval(K, th) || rho < 1e-300)
                occ[static_cast<std::size_t>(iy) * G + ix] = 1;
        }
    }
    for (int i = 0; i < K.m; ++i) {
        double cx = std::cos(kTwoPi * i / K.m), sy = std::sin(kTwoPi * i / K.m);
        for (double t = 0.0; t <= K.r[i] + cell * 0.25; t += cell * 0.5) {
            double u = std::min(t, K.r[i]);
            double fx = cx * u / cell + c0, fy = sy * u / cell + c0;
            // a boundary point belongs to every cell whose square touches it
            for (int iy = static_cast<int>(std::ceil(fy - 0.5 - 1e-9));
                 iy <= static_cast<int>(std::floor(fy + 0.5 + 1e-9)); ++iy)
                for (int ix = static_cast<int>(std::ceil(fx - 0.5 - 1e-9));
                     ix <= static_cast<int>(std::floor(fx + 0.5 + 1e-9)); ++ix)
                    if (ix >= 0 && ix < G && iy >= 0 && iy < G)
                        occ[static_cast<std::size_t>(iy) * G + ix] = 1;
        }
    }
    return occ;
}

}  // namespace

StarBody2D naive_minkowski_sum(const StarBody2D& A, const StarBody2D& B, int G) {
    if (G > 160) throw std::invalid_argument("naive_minkowski_sum: G <= 160 (O(G^4) guard)");
    if (G < 32) throw std::invalid_argument("naive_minkowski_sum: G >= 32 required");
    if (A.m != B.m) throw std::invalid_argument("naive_minkowski_sum: grid sizes differ");
    const double halfside = outer_radius(A) + outer_radius(B);
    if (halfside == 0.0) throw std::invalid_argument("naive_minkowski_sum: degenerate bodies");
    const double cell = 2.0 * halfside / G;
    std::vector<std::uint8_t> oa = occupancy(A, G, halfside);
    std::vector<std::uint8_t> ob = occupancy(B, G, halfside);

    std::vector<std::pair<int, int>> cells_a, cells_b;
    for (int iy = 0; iy < G; ++iy)
        for (int ix = 0; ix < G; ++ix) {
            if (oa[static_cast<std::size_t>(iy) * G + ix]) cells_a.emplace_back(ix, iy);
            if (ob[static_cast<std::size_t>(iy) * G + ix]) cells_b.emplace_back(ix, iy);
        }

    const int N = 2 * G;
    std::vector<std::uint8_t> sum(static_cast<std::size_t>(N) * N, 0);
    for (auto [ax, ay] : cells_a)
        for (auto [bx, by] : cells_b)
            sum[static_cast<std::size_t>(ay + by) * N + (ax + bx)] = 1;

    StarBody2D out{A.m, std::vector<double>(A.m, 0.0)};
    for (int i = 0; i < A.m; ++i) {
        double cx = std::cos(kTwoPi * i / A.m), sy = std::sin(kTwoPi * i / A.m);
        double best = 0.0;
        int steps = static_cast<int>(halfside / (cell * 0.25)) + 1;
        for (int s = steps; s >= 0; --s) {
            double t = std::min(halfside, s * cell * 0.25);
            int sx = static_cast<int>(std::floor(cx * t / cell + G - 0.5));
            int sy2 = static_cast<int>(std::floor(sy * t / cell + G - 0.5));
            if (sx < 0 || sx >= N || sy2 < 0 || sy2 >= N) continue;
            if (sum[static_cast<std::size_t>(sy2) * N + sx]) {
                best = t;
                break;
            }
        }
        out.r[i] = best;
    }
    return out;
}

double interval_mean_width(int n) {
    if (n < 2) throw std::invalid_argument("interval_mean_width: n >= 2 required");
    // E|x_1| = int sin(phi) cos^{n-2}(phi) dphi / int cos^{n-2}(phi) dphi over [0, pi/2]
    // (substituting t = sin(phi) into the marginal density (1 - t^2)^{(n-3)/2})
    const int nodes = 400;
    double num = 0.0, den = 0.0;
    // composite Gauss-Legendre (4-point) panels over [0, pi/2]
    static const double gx[4] = {-0.8611363115940526, -0.3399810435848563,
                                 0.3399810435848563, 0.8611363115940526};
    static const double gw[4] = {0.3478548451374538, 0.6521451548625461,
                                 0.6521451548625461, 0.3478548451374538};
    const double b = std::numbers::pi / 2.0;
    const double hpanel = b / nodes;
    for (int p = 0; p < nodes; ++p) {
        double mid = (p + 0.5) * hpanel;
        for (int j = 0; j < 4; ++j) {
            double phi = mid + 0.5 * hpanel * gx[j];
            double w = 0.5 * hpanel * gw[j];
            double cn = std::pow(std::cos(phi), n - 2);
            num += w * std::sin(phi) * cn;
            den += w * cn;
        }
    }
    return 0.5 * num / den;
}

std::pair<double, double> mc_mean_width(const StarBody2D& K, int samples, std::uint64_t seed) {
    if (samples < 1000) throw std::invalid_argument("mc_mean_width: samples >= 1000 required");
    SeedStream rng(seed);
    double s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < samples; ++i) {
        Direction d = random_direction(2, rng);
        double h = support_eval(K, d);
        s1 += h;
        s2 += h * h;
    }
    double mean = s1 / samples;
    double var = std::max(0.0, s2 / samples - mean * mean);
    return {mean, std::sqrt(var / samples)};
}

}  // namespace minksym::oracle
