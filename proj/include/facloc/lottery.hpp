#ifndef FACLOC_LOTTERY_HPP
#define FACLOC_LOTTERY_HPP

#include <utility>
#include <vector>

#include "facloc/core.hpp"
#include "facloc/mechanisms.hpp"

namespace facloc {

// Randomized mechanisms as explicit finite lotteries over placements, with
// exact expectation evaluation. No sampling: every support in scope has at
// most a handful of outcomes.

/// Finite probability distribution over placements. Canonical form: outcomes
/// sorted by placement, duplicates merged, probabilities positive and summing
/// exactly to 1.
class Lottery {
public:
    using Outcome = std::pair<Placement, Rational>;

    static Lottery point_mass(Placement p) {
        return make({{std::move(p), Rational(1)}});
    }

    static Lottery make(std::vector<Outcome> outcomes) {
        std::sort(outcomes.begin(), outcomes.end(),
                  [](const Outcome& a, const Outcome& b) { return a.first < b.first; });
        std::vector<Outcome> merged;
        Rational total(0);
        for (auto& o : outcomes) {
            if (o.second < Rational(0))
                throw OutOfRangeError("negative outcome probability " + o.second.str());
            if (o.second == Rational(0)) continue;
            total += o.second;
            if (!merged.empty() && merged.back().first == o.first)
                merged.back().second += o.second;
            else
                merged.push_back(std::move(o));
        }
        if (total != Rational(1))
            throw OutOfRangeError("outcome probabilities sum to " + total.str());
        Lottery l;
        l.outcomes_ = std::move(merged);
        return l;
    }

    const std::vector<Outcome>& outcomes() const { return outcomes_; }

    friend bool operator==(const Lottery& a, const Lottery& b) {
        return a.outcomes_ == b.outcomes_;
    }

private:
    Lottery() = default;
    std::vector<Outcome> outcomes_;
};

/// weight*a + (1-weight)*b, merged into canonical form.
inline Lottery mix(const Rational& weight, const Lottery& a, const Lottery& b) {
    std::vector<Lottery::Outcome> outcomes;
    for (const auto& o : a.outcomes()) outcomes.emplace_back(o.first, weight * o.second);
    Rational rest = Rational(1) - weight;
    for (const auto& o : b.outcomes()) outcomes.emplace_back(o.first, rest * o.second);
    return Lottery::make(std::move(outcomes));
}

/// Facility at x_1 w.p. 1/4, at the midpoint w.p. 1/2, at x_n w.p. 1/4.
inline Lottery lrm(const Instance& instance) {
    const Rational& x1 = instance.leftmost();
    const Rational& xn = instance.rightmost();
    return Lottery::make({{Placement::single(x1), Rational(1, 4)},
                          {Placement::single((x1 + xn) / 2), Rational(1, 2)},
                          {Placement::single(xn), Rational(1, 4)}});
}

/// Lrm with both ends censored into [1/3, 2/3].
inline Lottery lrmt(const Instance& instance) {
    Rational lo(1, 3), hi(2, 3);
    Rational y = truncate(instance.leftmost(), lo, hi);
    Rational z = truncate(instance.rightmost(), lo, hi);
    return Lottery::make({{Placement::single(y), Rational(1, 4)},
                          {Placement::single((y + z) / 2), Rational(1, 2)},
                          {Placement::single(z), Rational(1, 4)}});
}

/// Lrm with probability 2*delta, MinMaxP with probability 1-2*delta.
inline Lottery lrm_p(const Instance& instance, const Prediction& prediction,
                     const Rational& delta) {
    if (delta < Rational(0) || delta > Rational(1, 2)) throw InvalidDeltaError();
    return mix(delta * 2, lrm(instance),
               Lottery::point_mass(min_max_p(instance, prediction)));
}

/// Lrmt with probability 2*delta, MinMaxP with probability 1-2*delta.
inline Lottery lrmt_p(const Instance& instance, const Prediction& prediction,
                      const Rational& delta) {
    if (delta < Rational(0) || delta > Rational(1, 2)) throw InvalidDeltaError();
    return mix(delta * 2, lrmt(instance),
               Lottery::point_mass(min_max_p(instance, prediction)));
}

/// Facilities at {x_1, x_n} w.p. 1/2, {x_1+2d, x_n-2d} w.p. 1/6 and
/// {x_1+d, x_n-d} w.p. 1/3, where d is the optimal two-facility maximum
/// distance (d <= (x_n-x_1)/4, so the shifted pairs never cross).
inline Lottery rand_ends(const Instance& instance) {
    const Rational& x1 = instance.leftmost();
    const Rational& xn = instance.rightmost();
    Rational d = opt_two(instance).opt_max_distance;
    return Lottery::make({{Placement::two(x1, xn), Rational(1, 2)},
                          {Placement::two(x1 + d * 2, xn - d * 2), Rational(1, 6)},
                          {Placement::two(x1 + d, xn - d), Rational(1, 3)}});
}

/// RandEnds with probability 2*theta, MinMax2P with probability 1-2*theta.
inline Lottery rand_ends_2p(const Instance& instance, const PredictionPair& predictions,
                            const Rational& theta) {
    if (theta < Rational(0) || theta > Rational(1, 2)) throw InvalidThetaError();
    return mix(theta * 2, rand_ends(instance),
               Lottery::point_mass(min_max_2p(instance, predictions)));
}

/// Exact probability-weighted objective value over the lottery's outcomes.
inline Rational expected_value(const Lottery& lottery, const Instance& instance,
                               Objective objective) {
    Rational total(0);
    for (const auto& [placement, prob] : lottery.outcomes())
        total += prob * evaluate(instance, placement, objective);
    return total;
}

/// Exact expected distance from a (true) location to the nearest facility.
inline Rational expected_cost(const Lottery& lottery, const Rational& agent) {
    Rational total(0);
    for (const auto& [placement, prob] : lottery.outcomes())
        total += prob * agent_cost(agent, placement);
    return total;
}

} // namespace facloc

#endif
