#ifndef FACLOC_BOUNDS_HPP
#define FACLOC_BOUNDS_HPP

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "facloc/mechanism_spec.hpp"

namespace facloc {

/// An approximation ratio: a rational >= 1, or unbounded.
class Bound {
public:
    static Bound unbounded() { return Bound(); }
    static Bound finite(const Rational& value) {
        assert(value >= Rational(1));
        Bound b;
        b.value_ = value;
        return b;
    }

    bool is_unbounded() const { return !value_.has_value(); }
    const Rational& value() const { return *value_; }

    /// Ordering with unbounded as the top element.
    static bool leq(const Bound& a, const Bound& b) {
        if (b.is_unbounded()) return true;
        if (a.is_unbounded()) return false;
        return *a.value_ <= *b.value_;
    }

    std::string str() const { return value_ ? value_->str() : "inf"; }
    std::string decimal() const { return value_ ? value_->decimal() : "inf"; }

    friend bool operator==(const Bound& a, const Bound& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Bound& a, const Bound& b) { return !(a == b); }

private:
    Bound() = default;
    std::optional<Rational> value_;
};

struct BoundsPair {
    Bound consistency;
    Bound robustness;
};

/// Stated worst-case consistency and robustness for a mechanism and
/// objective. Unbounded marks the cells for which no bound exists
/// (MinMaxP min-utility robustness, the two-facility max-distance cells,
/// and the delta=0 / theta<1/2 degenerations).
inline BoundsPair closed_form_bounds(const MechanismSpec& spec, Objective objective) {
    const bool max_dist = objective == Objective::MaxDistance;
    const Rational one(1);
    switch (spec.family) {
    case Family::MinMaxP:
        return max_dist ? BoundsPair{Bound::finite(1), Bound::finite(2)}
                        : BoundsPair{Bound::finite(1), Bound::unbounded()};
    case Family::MidOrNearest:
        return max_dist ? BoundsPair{Bound::finite(2), Bound::finite(2)}
                        : BoundsPair{Bound::finite(Rational(3, 2)), Bound::finite(Rational(3, 2))};
    case Family::MinMaxPGamma: {
        const Rational& g = *spec.param;
        if (g == Rational(0))
            return closed_form_bounds(MechanismSpec::make(Family::MinMaxP), objective);
        if (max_dist) return {Bound::finite(2), Bound::finite(2)};
        return {Bound::finite((Rational(2) - g) / (Rational(2) - g * 2)),
                Bound::finite((one + g) / (g * 2))};
    }
    case Family::LrmP: {
        const Rational& d = *spec.param;
        if (max_dist) return {Bound::finite(one + d), Bound::finite(Rational(2) - d)};
        return {Bound::finite(one / (one - d)),
                d == Rational(0) ? Bound::unbounded() : Bound::finite(one / d)};
    }
    case Family::LrmtP: {
        const Rational& d = *spec.param;
        if (max_dist) return {Bound::finite(one + d * 2), Bound::finite(2)};
        return {Bound::finite(Rational(2) / (Rational(2) - d)),
                d == Rational(0) ? Bound::unbounded() : Bound::finite(Rational(2) / (d * 3))};
    }
    case Family::MinMax2P:
        return max_dist ? BoundsPair{Bound::finite(1), Bound::unbounded()}
                        : BoundsPair{Bound::finite(1), Bound::finite(Rational(3, 2))};
    case Family::MinMax2PLambda: {
        const Rational& l = *spec.param;
        if (l == Rational(0))
            return closed_form_bounds(MechanismSpec::make(Family::MinMax2P), objective);
        if (max_dist) return {Bound::unbounded(), Bound::unbounded()};
        return {Bound::finite((Rational(2) - l) / (Rational(2) - l * 2)),
                Bound::finite((Rational(3) + l * 2) / ((one + l * 2) * 2))};
    }
    case Family::RandEnds:
        return max_dist
                   ? BoundsPair{Bound::finite(Rational(5, 3)), Bound::finite(Rational(5, 3))}
                   : BoundsPair{Bound::finite(Rational(9, 7)), Bound::finite(Rational(9, 7))};
    case Family::RandEnds2P: {
        const Rational& t = *spec.param;
        if (max_dist)
            return {Bound::finite((Rational(3) + t * 4) / 3),
                    t == Rational(1, 2) ? Bound::finite(Rational(5, 3)) : Bound::unbounded()};
        return {Bound::finite(Rational(9) / (Rational(9) - t * 4)),
                Bound::finite(Rational(9) / ((Rational(3) + t) * 2))};
    }
    default:
        throw UnknownFamilyError("no stated bounds for " + spec.name());
    }
}

struct SweepPoint {
    Rational param;
    Bound consistency;
    Bound robustness;
};

/// Closed-form bounds along a list of parameter values, in the given order.
inline std::vector<SweepPoint> tradeoff_sweep(Family family,
                                              const std::vector<Rational>& param_values,
                                              Objective objective) {
    if (!parameterized(family))
        throw Error(std::string(family_name(family)) + " is not parameterized");
    std::vector<SweepPoint> points;
    points.reserve(param_values.size());
    for (const auto& p : param_values) {
        BoundsPair b = closed_form_bounds(MechanismSpec::make(family, p), objective);
        points.push_back({p, b.consistency, b.robustness});
    }
    return points;
}

} // namespace facloc

#endif
