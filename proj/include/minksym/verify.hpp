#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minksym/star2d.hpp"

// Property batteries behind `verify` and the acceptance suite. Each
// returns one result per property; a failure carries the counterexample
// seed and inputs in `detail`.

namespace minksym::verify {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Star body with (1-eps) D <= conv K <= (1+eps) D (checked via support
// extrema on the grid), spiky and nonconvex below the hull.
StarBody2D gen_sandwiched(std::uint64_t seed, int m, double eps);

// Lemma: a sandwiched hull forces net containment; 50 bodies per eps.
std::vector<PropertyResult> lemma2_suite(int bodies = 50);

// q(1/25) = 6/5, budget formulas vs independent arithmetic, and phase-3
// runs whose per-step inequalities must never trip.
std::vector<PropertyResult> lemma4_suite(int G = 512);

// Mean width conservation and radius monotonicity over random steps,
// plus the exact-support drift bound.
std::vector<PropertyResult> conservation_suite(int steps = 200, int G = 256);

// Fast FFT sum vs the brute-force dilation oracle.
std::vector<PropertyResult> oracle_suite(int pairs = 50, int G_fast = 1024, int G_naive = 128);

// Support of the symmetral equals the symmetrized support (conv commutes).
std::vector<PropertyResult> commutation_suite(int cases = 50, int G = 256);

bool all_pass(const std::vector<PropertyResult>& rs);

}  // namespace minksym::verify
