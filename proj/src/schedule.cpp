#include "minksym/schedule.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

namespace minksym {

namespace {

std::vector<int> halving_order(int m) {
    std::vector<int> order;
    order.reserve(m);
    if ((m & (m - 1)) == 0) {
        // bit reversal: 0, m/2, m/4, 3m/4, ...
        int bits = 0;
        while ((1 << bits) < m) ++bits;
        for (int i = 0; i < m; ++i) {
            int rev = 0;
            for (int b = 0; b < bits; ++b)
                if (i & (1 << b)) rev |= 1 << (bits - 1 - b);
            order.push_back(rev);
        }
    } else {
        // generic largest-gap bisection, FIFO among equal gaps
        order.push_back(0);
        std::deque<std::pair<int, int>> gaps{{0, m}};
        while (static_cast<int>(order.size()) < m) {
            auto [lo, hi] = gaps.front();
            gaps.pop_front();
            int mid = (lo + hi) / 2;
            if (mid > lo && mid < hi) {
                order.push_back(mid);
                gaps.emplace_back(lo, mid);
                gaps.emplace_back(mid, hi);
            }
        }
    }
    return order;
}

}  // namespace

Strategy Strategy::uniform_random(std::uint64_t seed) {
    return Strategy(Kind::UniformRandom, seed, 0);
}

Strategy Strategy::grid_random_2d(std::uint64_t seed, int m) {
    if (m < 8 || m % 2 != 0) throw std::invalid_argument("grid_random_2d: m even and >= 8 required");
    return Strategy(Kind::GridRandom2D, seed, m);
}

Strategy Strategy::fixed_list(std::vector<Direction> dirs, int grid_m) {
    Strategy s(Kind::FixedList, 0, grid_m);
    s.fixed_ = std::move(dirs);
    return s;
}

Strategy Strategy::halving_angles_2d(int m) {
    if (m < 8 || m % 2 != 0) throw std::invalid_argument("halving_angles_2d: m even and >= 8 required");
    Strategy s(Kind::HalvingAngles2D, 0, m);
    s.halving_ = halving_order(m);
    return s;
}

Direction Strategy::next_direction(int n) {
    switch (kind_) {
        case Kind::UniformRandom:
            return random_direction(n, rng_);
        case Kind::GridRandom2D:
        case Kind::HalvingAngles2D: {
            if (n != 2) throw std::invalid_argument("grid strategy: n = 2 required");
            GridAngle a = next_grid_angle();
            return Direction::from_angle(2.0 * std::numbers::pi * a.k / m_);
        }
        case Kind::FixedList: {
            if (pos_ >= fixed_.size()) throw std::runtime_error("FixedList strategy exhausted");
            const Direction& d = fixed_[pos_++];
            if (d.dim() != n) throw std::invalid_argument("FixedList: dimension mismatch");
            return d;
        }
    }
    throw std::logic_error("unreachable");
}

GridAngle Strategy::next_grid_angle() {
    switch (kind_) {
        case Kind::GridRandom2D:
            return GridAngle{static_cast<int>(rng_.uniform_int(m_))};
        case Kind::HalvingAngles2D: {
            GridAngle a{halving_[pos_ % halving_.size()]};
            ++pos_;
            return a;
        }
        case Kind::FixedList: {
            if (pos_ >= fixed_.size()) throw std::runtime_error("FixedList strategy exhausted");
            const Direction& d = fixed_[pos_++];
            if (d.dim() != 2) throw std::invalid_argument("FixedList: 2D required for grid angles");
            double t = d.angle() / (2.0 * std::numbers::pi);
            // grid size unknown here; caller validated alignment via m_ when set
            if (m_ <= 0) throw std::runtime_error("FixedList: no grid size configured");
            double idx = t * m_;
            int k = static_cast<int>(std::lround(idx));
            if (std::abs(idx - k) > 1e-9 * m_)
                throw std::invalid_argument("FixedList: direction not grid-aligned");
            return GridAngle{((k % m_) + m_) % m_};
        }
        default:
            throw std::invalid_argument("strategy does not emit grid angles");
    }
}

StopRule::StopRule(Kind k, StopRule a, StopRule b) : kind_(k) {
    children_.push_back(std::move(a));
    children_.push_back(std::move(b));
}

StopRule StopRule::inner_radius_at_least(double rho) {
    return StopRule(Kind::InnerRadiusAtLeast, rho);
}

StopRule StopRule::sandwich_within(double eps) { return StopRule(Kind::SandwichWithin, eps); }

StopRule StopRule::max_steps(int n) { return StopRule(Kind::MaxSteps, n); }

StopRule StopRule::operator&&(const StopRule& other) const {
    return StopRule(Kind::And, *this, other);
}

StopRule StopRule::operator||(const StopRule& other) const {
    return StopRule(Kind::Or, *this, other);
}

bool StopRule::should_stop(const StepMetrics& m) const {
    switch (kind_) {
        case Kind::InnerRadiusAtLeast:
            return m.rho_in >= value_;
        case Kind::SandwichWithin:
            return m.rho_in >= 1.0 - value_ && m.rho_out <= 1.0 + value_;
        case Kind::MaxSteps:
            return m.step >= static_cast<int>(value_);
        case Kind::And:
            return children_[0].should_stop(m) && children_[1].should_stop(m);
        case Kind::Or:
            return children_[0].should_stop(m) || children_[1].should_stop(m);
    }
    return false;
}

bool StopRule::has_max_steps() const {
    if (kind_ == Kind::MaxSteps) return true;
    for (const auto& c : children_)
        if (c.has_max_steps()) return true;
    return false;
}

}  // namespace minksym
