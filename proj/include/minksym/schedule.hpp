#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "minksym/geom.hpp"
#include "minksym/star2d.hpp"

// Direction schedules (stand-ins for the existential sequences) and
// composable stopping rules.

namespace minksym {

class Strategy {
public:
    enum class Kind { UniformRandom, GridRandom2D, FixedList, HalvingAngles2D };

    static Strategy uniform_random(std::uint64_t seed);
    static Strategy grid_random_2d(std::uint64_t seed, int m);
    // grid_m > 0 allows next_grid_angle() for grid-aligned lists
    static Strategy fixed_list(std::vector<Direction> dirs, int grid_m = 0);
    // emits grid indices in largest-gap-bisection order (bit-reversed for
    // power-of-two m): 0, m/2, m/4, 3m/4, ...
    static Strategy halving_angles_2d(int m);

    Kind kind() const { return kind_; }
    int grid_m() const { return m_; }

    // throws when a FixedList is exhausted
    Direction next_direction(int n);
    // grid-aligned strategies only (GridRandom2D, HalvingAngles2D, or a
    // FixedList of grid-aligned directions)
    GridAngle next_grid_angle();

private:
    Strategy(Kind k, std::uint64_t seed, int m) : kind_(k), rng_(seed), m_(m) {}

    Kind kind_;
    SeedStream rng_;
    int m_ = 0;
    std::vector<Direction> fixed_;
    std::vector<int> halving_;
    std::size_t pos_ = 0;
};

// Metrics fed to stop rules; the pipeline fills one per step.
struct StepMetrics {
    int step = 0;
    double rho_in = 0.0;
    double rho_out = 0.0;
};

class StopRule {
public:
    static StopRule inner_radius_at_least(double rho);
    static StopRule sandwich_within(double eps);  // about the unit ball
    static StopRule max_steps(int n);
    StopRule operator&&(const StopRule& other) const;
    StopRule operator||(const StopRule& other) const;

    bool should_stop(const StepMetrics& m) const;
    // every composed rule must carry a MaxSteps bound somewhere
    bool has_max_steps() const;

private:
    enum class Kind { InnerRadiusAtLeast, SandwichWithin, MaxSteps, And, Or };
    StopRule(Kind k, double v) : kind_(k), value_(v) {}
    StopRule(Kind k, StopRule a, StopRule b);

    Kind kind_;
    double value_ = 0.0;
    std::vector<StopRule> children_;
};

}  // namespace minksym
