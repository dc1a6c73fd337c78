#pragma once

#include <utility>

#include "minksym/geom.hpp"
#include "minksym/star2d.hpp"

// Convex bodies in R^n carried as support values on a direction cloud.
// The 2D uniform-grid cloud with grid-aligned reflections is exact (index
// permutation); everything else goes through spherical interpolation and
// carries an error estimate.

namespace minksym {

struct SupportBody {
    int n = 0;
    SphereQuadrature cloud;
    std::vector<double> h;      // aligned with cloud.nodes
    double interp_err = 0.0;    // accumulated interpolation error estimate

    int size() const { return static_cast<int>(h.size()); }
};

struct IntervalBody {
    double R = 0.0;
    Direction u;
};

// Support function of the segment [0, R u]: R * max(0, <u, d>). Exact.
double interval_support(const IntervalBody& I, const Direction& d);

SupportBody support_body_from_interval(const IntervalBody& I, SphereQuadrature cloud);
SupportBody support_body_from_ball(double rho, SphereQuadrature cloud);
// Samples support_eval of the fan realization on the m-grid cloud.
SupportBody support_body_from_star(const StarBody2D& K);

// h'(d) = (h(d) + h(R_u d))/2. Exact when each R_u d is a cloud node,
// otherwise k = n+1 nearest-node geodesic inverse-distance interpolation.
SupportBody symmetral_support(const SupportBody& H, const Direction& u);

double mean_width(const SupportBody& H);

SupportBody scale(const SupportBody& H, double s);

// (min h, max h) over the cloud; throws if some h < 0 (origin outside).
std::pair<double, double> sandwich_radii(const SupportBody& H);

}  // namespace minksym
