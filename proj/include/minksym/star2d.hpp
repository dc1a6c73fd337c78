#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "minksym/geom.hpp"

// Planar star-shaped bodies stored as radial functions on a uniform angle
// grid. Minkowski sums of (possibly nonconvex) bodies go through a binary
// occupancy raster and an FFT indicator convolution; reflections about
// grid-aligned axes are exact index permutations.

namespace minksym {

// Grid direction index k, meaning e(2*pi*k/m) for the body's grid size m.
struct GridAngle {
    int k = 0;
};

struct StarBody2D {
    int m = 0;               // grid size, even, >= 8
    std::vector<double> r;   // r[i] = radial function at theta_i = 2*pi*i/m

    double theta(int i) const;
};

StarBody2D make_star(int m, std::vector<double> r);

// Occupancy raster over the square [-halfside, halfside]^2, G x G cells.
struct Raster {
    int G = 0;
    double cell = 0.0;            // spacing (length per cell)
    double halfside = 0.0;
    std::vector<std::uint8_t> occ;  // row-major, G*G

    bool at(int ix, int iy) const { return occ[static_cast<std::size_t>(iy) * G + ix] != 0; }
};

Raster rasterize(const StarBody2D& K, int G, double halfside);

// Radial function with linear interpolation in angle; 2pi-periodic.
double radial_eval(const StarBody2D& K, double theta);

// Reflection about the line u-perp, u = e(2*pi*a.k/m). Exact permutation
// r'[i] = r[(2a + m/2 - i) mod m]; requires m even.
StarBody2D reflect_body(const StarBody2D& K, GridAngle a);

StarBody2D scale(const StarBody2D& K, double s);

// Minkowski sum result plus the raster tolerance tau = 4 cell widths of
// the shared raster, the unit every approximate assertion is measured in.
struct SumResult {
    StarBody2D body;
    double tau = 0.0;
    double cell = 0.0;
};

// A + B via occupancy convolution at resolution G (power of two).
SumResult minkowski_sum(const StarBody2D& A, const StarBody2D& B, int G);

// (K + R_u K)/2 with u = e(2*pi*a/m); the 1/2 scaling is exact.
SumResult symmetral(const StarBody2D& K, GridAngle a, int G);

double inner_radius(const StarBody2D& K);  // min_i r[i]
double outer_radius(const StarBody2D& K);  // max_i r[i]

// Support function of the realized body: max_i r[i] <e(theta_i), d>.
double support_eval(const StarBody2D& K, const Direction& d);
double support_eval(const StarBody2D& K, double theta_d);
double mean_width(const StarBody2D& K);

// Distance from p to the segment fan { [0, r[j] e(theta_j)] }.
double dist_to_body(const StarBody2D& K, double px, double py);

// max over grid angles of dist((1-eps) e(theta_i), K).
double net_max_dist(const StarBody2D& K, double eps);

// (1-eps) S^1 within 2*sqrt(eps) of K, sampled at the grid angles.
bool net_contained(const StarBody2D& K, double eps, double slack = 0.0);

// Test-corpus generators.
StarBody2D gen_disc(int m, double rho);
StarBody2D gen_segment(int m, double R, GridAngle a);
StarBody2D gen_spiky(int m, int spikes, double len, double base);
StarBody2D gen_cross(int m, double arm, double width);
StarBody2D gen_random_star(std::uint64_t seed, int m, double lo, double hi);

}  // namespace minksym
