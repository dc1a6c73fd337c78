#include "minksym/support_nd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace minksym {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// grid index of u if the 2D cloud is a uniform grid and u sits on it
int grid_index_of(const SphereQuadrature& cloud, const Direction& u) {
    if (cloud.kind != CloudKind::Grid2D || u.dim() != 2) return -1;
    int m = cloud.size();
    double t = u.angle() / kTwoPi * m;
    int k = static_cast<int>(std::lround(t));
    if (std::abs(t - k) > 1e-9 * m) return -1;
    return ((k % m) + m) % m;
}

}  // namespace

double interval_support(const IntervalBody& I, const Direction& d) {
    if (I.u.dim() != d.dim()) throw std::invalid_argument("interval_support: dimension mismatch");
    if (!(I.R > 0.0)) throw std::invalid_argument("interval_support: R > 0 required");
    return I.R * std::max(0.0, dot(I.u.u, d.u));
}

SupportBody support_body_from_interval(const IntervalBody& I, SphereQuadrature cloud) {
    SupportBody H;
    H.n = cloud.n;
    H.h.reserve(cloud.size());
    for (const auto& d : cloud.nodes) H.h.push_back(interval_support(I, d));
    H.cloud = std::move(cloud);
    return H;
}

SupportBody support_body_from_ball(double rho, SphereQuadrature cloud) {
    if (!(rho >= 0.0)) throw std::invalid_argument("support_body_from_ball: rho >= 0 required");
    SupportBody H;
    H.n = cloud.n;
    H.h.assign(cloud.size(), rho);
    H.cloud = std::move(cloud);
    return H;
}

SupportBody support_body_from_star(const StarBody2D& K) {
    SupportBody H;
    H.n = 2;
    H.cloud = sphere_quadrature(2, K.m);
    H.h.reserve(K.m);
    for (int i = 0; i < K.m; ++i) H.h.push_back(support_eval(K, K.theta(i)));
    return H;
}

SupportBody symmetral_support(const SupportBody& H, const Direction& u) {
    if (u.dim() != H.n) throw std::invalid_argument("symmetral_support: dimension mismatch");
    SupportBody out = H;

    // exact path: uniform 2D grid, reflection maps the grid to itself
    if (int a = grid_index_of(H.cloud, u); a >= 0) {
        int m = H.cloud.size();
        int base = 2 * a + m / 2;
        for (int i = 0; i < m; ++i) {
            int j = ((base - i) % m + m) % m;
            out.h[i] = 0.5 * (H.h[i] + H.h[j]);
        }
        return out;
    }

    const int M = H.cloud.size();
    const int k = H.n + 1;
    std::vector<int> idx(k);
    std::vector<double> dots(k);
    double max_osc = 0.0;
    for (int i = 0; i < M; ++i) {
        Vec p = reflect(H.cloud.nodes[i].u, u);
        // top-k nodes by inner product
        int filled = 0;
        for (int j = 0; j < M; ++j) {
            double d = dot(p, H.cloud.nodes[j].u);
            if (filled < k) {
                int pos = filled++;
                while (pos > 0 && dots[pos - 1] < d) {
                    dots[pos] = dots[pos - 1];
                    idx[pos] = idx[pos - 1];
                    --pos;
                }
                dots[pos] = d;
                idx[pos] = j;
            } else if (d > dots[k - 1]) {
                int pos = k - 1;
                while (pos > 0 && dots[pos - 1] < d) {
                    dots[pos] = dots[pos - 1];
                    idx[pos] = idx[pos - 1];
                    --pos;
                }
                dots[pos] = d;
                idx[pos] = j;
            }
        }
        double hr;
        if (dots[0] >= 1.0 - 1e-15) {
            hr = H.h[idx[0]];
        } else {
            double wsum = 0.0, hsum = 0.0;
            double hmin = H.h[idx[0]], hmax = H.h[idx[0]];
            for (int t = 0; t < k; ++t) {
                double geo = std::acos(std::clamp(dots[t], -1.0, 1.0));
                double w = 1.0 / std::max(geo, 1e-12);
                wsum += w;
                hsum += w * H.h[idx[t]];
                hmin = std::min(hmin, H.h[idx[t]]);
                hmax = std::max(hmax, H.h[idx[t]]);
            }
            hr = hsum / wsum;
            max_osc = std::max(max_osc, hmax - hmin);
        }
        out.h[i] = 0.5 * (H.h[i] + hr);
    }
    // the interpolated half of the average is off by at most the local
    // h-oscillation over the neighbor set (which scales with the covering radius)
    out.interp_err = H.interp_err + 0.5 * max_osc;
    return out;
}

double mean_width(const SupportBody& H) {
    double s = 0.0;
    for (int i = 0; i < H.size(); ++i) s += H.cloud.weights[i] * H.h[i];
    return s;
}

SupportBody scale(const SupportBody& H, double s) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw std::invalid_argument("scale: bad factor");
    SupportBody out = H;
    for (auto& v : out.h) v *= s;
    out.interp_err *= s;
    return out;
}

std::pair<double, double> sandwich_radii(const SupportBody& H) {
    auto [lo, hi] = std::minmax_element(H.h.begin(), H.h.end());
    if (*lo < -1e-12)
        throw std::domain_error("sandwich_radii: negative support value (origin outside body)");
    return {*lo, *hi};
}

}  // namespace minksym
