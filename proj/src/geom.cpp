#include "minksym/geom.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace minksym {

double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Direction Direction::from(Vec v) {
    if (v.size() < 2) throw std::invalid_argument("Direction: n >= 2 required");
    double nv = norm(v);
    if (!std::isfinite(nv) || nv <= 0.0) throw std::invalid_argument("Direction: zero or non-finite vector");
    for (auto& c : v) c /= nv;
    return Direction{std::move(v)};
}

Direction Direction::from_angle(double theta) {
    return Direction{{std::cos(theta), std::sin(theta)}};
}

double Direction::angle() const {
    if (dim() != 2) throw std::invalid_argument("Direction::angle: 2D only");
    double a = std::atan2(u[1], u[0]);
    if (a < 0) a += 2.0 * std::numbers::pi;
    return a;
}

Vec reflect(const Vec& x, const Direction& u) {
    if (static_cast<int>(x.size()) != u.dim())
        throw std::invalid_argument("reflect: dimension mismatch");
    double p = 2.0 * dot(x, u.u);
    Vec y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= p * u.u[i];
    return y;
}

Direction reflect(const Direction& d, const Direction& u) {
    return Direction{reflect(d.u, u)};
}

double SeedStream::uniform() {
    // 53 random bits -> [0,1)
    return (eng_() >> 11) * 0x1.0p-53;
}

double SeedStream::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1, u2;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

std::uint64_t SeedStream::uniform_int(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_int: bound must be positive");
    // rejection sampling to avoid modulo bias
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = eng_();
    } while (v >= limit);
    return v % bound;
}

Direction random_direction(int n, SeedStream& rng) {
    if (n < 2) throw std::invalid_argument("random_direction: n >= 2 required");
    Vec v(n);
    double nv;
    do {
        for (auto& c : v) c = rng.gaussian();
        nv = norm(v);
    } while (nv < 1e-12);
    for (auto& c : v) c /= nv;
    return Direction{std::move(v)};
}

SphereQuadrature sphere_quadrature(int n, int M) {
    if (n < 2) throw std::invalid_argument("sphere_quadrature: n >= 2 required");
    if (M < 4) throw std::invalid_argument("sphere_quadrature: M >= 4 required");
    SphereQuadrature q;
    q.n = n;
    q.nodes.reserve(M);
    q.weights.assign(M, 1.0 / M);
    if (n == 2) {
        q.kind = CloudKind::Grid2D;
        for (int i = 0; i < M; ++i)
            q.nodes.push_back(Direction::from_angle(2.0 * std::numbers::pi * i / M));
    } else if (n == 3) {
        q.kind = CloudKind::Fibonacci3D;
        const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
        for (int i = 0; i < M; ++i) {
            double z = 1.0 - (2.0 * i + 1.0) / M;
            double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            double phi = 2.0 * std::numbers::pi * i / golden;
            q.nodes.push_back(Direction{{rho * std::cos(phi), rho * std::sin(phi), z}});
        }
    } else {
        q.kind = CloudKind::MonteCarlo;
        // fixed internal seed: the cloud is part of the quadrature's identity
        SeedStream rng(0x9e3779b97f4a7c15ULL ^ (static_cast<std::uint64_t>(n) << 32) ^ M);
        for (int i = 0; i < M; ++i) q.nodes.push_back(random_direction(n, rng));
    }
    return q;
}

}  // namespace minksym
