#ifndef FACLOC_CORE_HPP
#define FACLOC_CORE_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "facloc/errors.hpp"
#include "facloc/rational.hpp"

namespace facloc {

// Agents, facilities and predictions all live on the unit interval. A
// Location is a Rational whose membership in [0,1] is enforced by the types
// that hold it (Instance, Placement, Prediction, PhantomProfile) and by the
// band checks in truncate().
using Location = Rational;

inline bool in_unit_interval(const Rational& r) {
    return r >= Rational(0) && r <= Rational(1);
}

enum class Objective { MaxDistance, MinUtility };

/// Sorted multiset of agent locations, x_1 <= ... <= x_n, n >= 1.
class Instance {
public:
    explicit Instance(std::vector<Rational> agents) : agents_(std::move(agents)) {
        if (agents_.empty()) throw EmptyInstanceError();
        for (const auto& a : agents_)
            if (!in_unit_interval(a))
                throw OutOfRangeError("agent location " + a.str() + " outside [0,1]");
        std::sort(agents_.begin(), agents_.end());
    }

    const std::vector<Rational>& agents() const { return agents_; }
    std::size_t size() const { return agents_.size(); }
    const Rational& leftmost() const { return agents_.front(); }
    const Rational& rightmost() const { return agents_.back(); }

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.agents_ == b.agents_;
    }

private:
    std::vector<Rational> agents_;
};

inline Instance make_instance(std::vector<Rational> locations) {
    return Instance(std::move(locations));
}

/// One or two facility locations; two-facility placements are kept sorted.
class Placement {
public:
    explicit Placement(std::vector<Rational> facilities)
        : facilities_(std::move(facilities)) {
        if (facilities_.empty() || facilities_.size() > 2)
            throw OutOfRangeError("placement must contain one or two facilities");
        for (const auto& f : facilities_)
            if (!in_unit_interval(f))
                throw OutOfRangeError("facility location " + f.str() + " outside [0,1]");
        std::sort(facilities_.begin(), facilities_.end());
    }

    static Placement single(const Rational& x) { return Placement({x}); }
    static Placement two(const Rational& a, const Rational& b) { return Placement({a, b}); }

    const std::vector<Rational>& facilities() const { return facilities_; }
    std::size_t size() const { return facilities_.size(); }

    friend bool operator==(const Placement& a, const Placement& b) {
        return a.facilities_ == b.facilities_;
    }
    friend bool operator<(const Placement& a, const Placement& b) {
        return std::lexicographical_compare(a.facilities_.begin(), a.facilities_.end(),
                                            b.facilities_.begin(), b.facilities_.end());
    }

private:
    std::vector<Rational> facilities_;
};

struct OptimumReport {
    Placement placement;
    Rational opt_max_distance;
    Rational opt_min_utility; // always 1 - opt_max_distance
};

/// Distance from an agent to the nearest facility.
inline Rational agent_cost(const Rational& agent, const Placement& placement) {
    const auto& fs = placement.facilities();
    Rational best = abs(agent - fs.front());
    for (std::size_t i = 1; i < fs.size(); ++i) {
        Rational d = abs(agent - fs[i]);
        if (d < best) best = d;
    }
    return best;
}

inline Rational evaluate(const Instance& instance, const Placement& placement,
                         Objective objective) {
    Rational worst(0);
    for (const auto& a : instance.agents()) {
        Rational d = agent_cost(a, placement);
        if (d > worst) worst = d;
    }
    return objective == Objective::MaxDistance ? worst : Rational(1) - worst;
}

/// Optimal single facility: the midpoint of the extreme agents.
inline OptimumReport opt_single(const Instance& instance) {
    Rational mid = (instance.leftmost() + instance.rightmost()) / 2;
    Rational dist = (instance.rightmost() - instance.leftmost()) / 2;
    return {Placement::single(mid), dist, Rational(1) - dist};
}

/// Optimal two facilities: best contiguous split of the sorted agents, each
/// group served by its midpoint. Ties go to the leftmost split.
inline OptimumReport opt_two(const Instance& instance) {
    const auto& xs = instance.agents();
    std::size_t n = xs.size();
    if (n == 1)
        return {Placement::two(xs[0], xs[0]), Rational(0), Rational(1)};
    Rational best_dist;
    std::size_t best_split = 0;
    bool have = false;
    for (std::size_t k = 1; k < n; ++k) {
        Rational left = (xs[k - 1] - xs[0]) / 2;
        Rational right = (xs[n - 1] - xs[k]) / 2;
        Rational cand = left > right ? left : right;
        if (!have || cand < best_dist) {
            best_dist = cand;
            best_split = k;
            have = true;
        }
    }
    Rational f1 = (xs[0] + xs[best_split - 1]) / 2;
    Rational f2 = (xs[best_split] + xs[n - 1]) / 2;
    return {Placement::two(f1, f2), best_dist, Rational(1) - best_dist};
}

/// Clamp x into [lo, hi].
inline Rational truncate(const Rational& x, const Rational& lo, const Rational& hi) {
    if (lo > hi)
        throw InvalidBandError("truncation band [" + lo.str() + ", " + hi.str() + "] is empty");
    if (x < lo) return lo;
    if (x > hi) return hi;
    return x;
}

} // namespace facloc

#endif
