#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Basic vector geometry on R^n and the unit sphere: reflections,
// seeded random directions, and spherical quadrature rules.

namespace minksym {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);

// Unit vector on S^{n-1}. Construction normalizes and validates.
struct Direction {
    Vec u;

    int dim() const { return static_cast<int>(u.size()); }
    static Direction from(Vec v);               // normalizes; throws on zero/non-finite
    static Direction from_angle(double theta);  // n = 2
    double angle() const;                       // n = 2 only, in [0, 2pi)
};

// x - 2<x,u>u. Involution, isometry, fixes the hyperplane u-perp.
Vec reflect(const Vec& x, const Direction& u);
Direction reflect(const Direction& d, const Direction& u);

// Deterministic random source. Gaussian via Box-Muller so replays are
// bit-identical regardless of standard library internals.
class SeedStream {
public:
    explicit SeedStream(std::uint64_t seed) : eng_(seed) {}

    double uniform();                    // [0, 1)
    double gaussian();                   // N(0, 1)
    std::uint64_t uniform_int(std::uint64_t bound);  // [0, bound)

private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Uniform on S^{n-1}: normalized standard Gaussian vector.
Direction random_direction(int n, SeedStream& rng);

enum class CloudKind { Grid2D, Fibonacci3D, MonteCarlo };

// Equal-weight node set approximating the normalized Haar measure.
struct SphereQuadrature {
    int n = 0;
    CloudKind kind = CloudKind::Grid2D;
    std::vector<Direction> nodes;
    std::vector<double> weights;  // sums to 1

    int size() const { return static_cast<int>(nodes.size()); }
};

// n = 2: uniform angle grid of M nodes (exact for trig polynomials of
// degree < M). n = 3: Fibonacci lattice. n >= 4: seeded Monte Carlo.
SphereQuadrature sphere_quadrature(int n, int M);

}  // namespace minksym
