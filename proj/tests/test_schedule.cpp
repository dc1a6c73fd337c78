#include <doctest.h>

#include <cmath>

#include "minksym/schedule.hpp"

using namespace minksym;

TEST_CASE("FixedList: sequence then exhaustion") {
    Strategy s = Strategy::fixed_list({Direction{{1.0, 0.0}}, Direction{{0.0, 1.0}}});
    CHECK(s.next_direction(2).u[0] == 1.0);
    CHECK(s.next_direction(2).u[1] == 1.0);
    CHECK_THROWS(s.next_direction(2));
}

TEST_CASE("GridRandom2D: deterministic replay") {
    Strategy a = Strategy::grid_random_2d(99, 720);
    Strategy b = Strategy::grid_random_2d(99, 720);
    for (int i = 0; i < 50; ++i) CHECK(a.next_grid_angle().k == b.next_grid_angle().k);
    Strategy c = Strategy::grid_random_2d(100, 720);
    bool same = true;
    Strategy a2 = Strategy::grid_random_2d(99, 720);
    for (int i = 0; i < 50; ++i)
        if (a2.next_grid_angle().k != c.next_grid_angle().k) same = false;
    CHECK_FALSE(same);
}

TEST_CASE("HalvingAngles2D: bit-reversed bisection order") {
    Strategy s = Strategy::halving_angles_2d(8);
    int expect[8] = {0, 4, 2, 6, 1, 5, 3, 7};
    for (int i = 0; i < 8; ++i) CHECK(s.next_grid_angle().k == expect[i]);
    CHECK(s.next_grid_angle().k == 0);  // wraps
}

TEST_CASE("StopRule: primitives and composition") {
    CHECK(StopRule::inner_radius_at_least(0.5).should_stop({3, 0.6, 2.0}));
    CHECK_FALSE(StopRule::inner_radius_at_least(0.5).should_stop({3, 0.4, 2.0}));
    CHECK(StopRule::sandwich_within(0.1).should_stop({0, 0.95, 1.04}));
    CHECK_FALSE(StopRule::sandwich_within(0.1).should_stop({0, 0.85, 1.04}));
    CHECK(StopRule::max_steps(10).should_stop({10, 0.0, 9.0}));
    CHECK_FALSE(StopRule::max_steps(10).should_stop({9, 0.0, 9.0}));

    StopRule r = StopRule::inner_radius_at_least(0.5) || StopRule::max_steps(100);
    CHECK(r.has_max_steps());
    CHECK(r.should_stop({3, 0.6, 2.0}));
    CHECK(r.should_stop({100, 0.1, 2.0}));
    CHECK_FALSE((StopRule::inner_radius_at_least(0.5) && StopRule::sandwich_within(0.1)).has_max_steps());
}
