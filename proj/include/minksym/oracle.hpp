#pragma once

#include <cstdint>
#include <utility>

#include "minksym/star2d.hpp"

// Independent brute-force references used by tests and the acceptance
// suite. Deliberately shares no convolution or extraction code with star2d.

namespace minksym::oracle {

// Direct O(G^4) dilation of the two occupancy sets. G <= 160 enforced.
StarBody2D naive_minkowski_sum(const StarBody2D& A, const StarBody2D& B, int G);

// (1/2) E|x_1| over S^{n-1} via 1D quadrature of the marginal; abs err <= 1e-10.
double interval_mean_width(int n);

// Monte Carlo mean width: (estimate, standard error).
std::pair<double, double> mc_mean_width(const StarBody2D& K, int samples, std::uint64_t seed);

}  // namespace minksym::oracle
