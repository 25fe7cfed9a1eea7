#ifndef FACLOC_MECHANISMS_HPP
#define FACLOC_MECHANISMS_HPP

#include <cassert>
#include <cstddef>
#include <vector>

#include "facloc/core.hpp"

namespace facloc {

// Deterministic mechanisms: the generalized-median family and the
// prediction-augmented MinMaxP variants with censored predictions.

/// A predicted optimal facility location.
class Prediction {
public:
    explicit Prediction(const Rational& value) : value_(value) {
        if (!in_unit_interval(value_))
            throw OutOfRangeError("prediction " + value_.str() + " outside [0,1]");
    }
    const Rational& value() const { return value_; }
    /// A prediction is extreme iff it is 0 or 1.
    bool extreme() const { return value_ == Rational(0) || value_ == Rational(1); }

    friend bool operator==(const Prediction& a, const Prediction& b) {
        return a.value_ == b.value_;
    }

private:
    Rational value_;
};

/// Predictions for the leftmost and rightmost of two facilities, normalized
/// so that left <= right.
class PredictionPair {
public:
    PredictionPair(Prediction a, Prediction b) : left_(a), right_(b) {
        if (right_.value() < left_.value()) std::swap(left_, right_);
    }
    PredictionPair(const Rational& a, const Rational& b)
        : PredictionPair(Prediction(a), Prediction(b)) {}

    const Prediction& left() const { return left_; }
    const Prediction& right() const { return right_; }

    friend bool operator==(const PredictionPair& a, const PredictionPair& b) {
        return a.left_ == b.left_ && a.right_ == b.right_;
    }

private:
    Prediction left_;
    Prediction right_;
};

/// The n-1 fixed "phantom" locations of a generalized median mechanism.
class PhantomProfile {
public:
    explicit PhantomProfile(std::vector<Rational> phantoms)
        : phantoms_(std::move(phantoms)) {
        for (const auto& z : phantoms_)
            if (!in_unit_interval(z))
                throw OutOfRangeError("phantom location " + z.str() + " outside [0,1]");
    }
    const std::vector<Rational>& phantoms() const { return phantoms_; }
    std::size_t size() const { return phantoms_.size(); }

private:
    std::vector<Rational> phantoms_;
};

/// Lower median: the element with fewer than ceil(p/2) values below it and
/// at most floor(p/2) values above it.
inline Rational median_of(std::vector<Rational> values) {
    if (values.empty()) throw EmptyListError();
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

/// Facility at the median of the n agents merged with their n-1 phantoms.
inline Placement gen_median(const Instance& instance, const PhantomProfile& profile) {
    if (profile.size() + 1 != instance.size())
        throw PhantomCountMismatchError(
            "expected " + std::to_string(instance.size() - 1) + " phantoms, got " +
            std::to_string(profile.size()));
    std::vector<Rational> merged = instance.agents();
    merged.insert(merged.end(), profile.phantoms().begin(), profile.phantoms().end());
    return Placement::single(median_of(std::move(merged)));
}

enum class Preset { Leftmost, Rightmost, Median, MidOrNearest };

inline PhantomProfile preset_phantoms(Preset preset, std::size_t n) {
    std::vector<Rational> zs;
    zs.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        switch (preset) {
        case Preset::Leftmost: zs.emplace_back(0); break;
        case Preset::Rightmost: zs.emplace_back(1); break;
        case Preset::Median: zs.emplace_back(i <= n / 2 ? Rational(0) : Rational(1)); break;
        case Preset::MidOrNearest: zs.emplace_back(Rational(1, 2)); break;
        }
    }
    return PhantomProfile(std::move(zs));
}

inline Placement preset(const Instance& instance, Preset which) {
    return gen_median(instance, preset_phantoms(which, instance.size()));
}

/// Facility at the prediction, clamped into [x_1, x_n].
inline Placement min_max_p(const Instance& instance, const Prediction& prediction) {
    const Rational& pi = prediction.value();
    if (pi < instance.leftmost()) return Placement::single(instance.leftmost());
    if (pi > instance.rightmost()) return Placement::single(instance.rightmost());
    return Placement::single(pi);
}

/// MinMaxP on the prediction censored into [gamma, 1-gamma].
inline Placement min_max_p_gamma(const Instance& instance, const Prediction& prediction,
                                 const Rational& gamma) {
    if (gamma < Rational(0) || gamma > Rational(1, 2)) throw InvalidGammaError();
    Rational censored = truncate(prediction.value(), gamma, Rational(1) - gamma);
    return min_max_p(instance, Prediction(censored));
}

/// MinMaxP applied to each of the two predictions in turn.
inline Placement min_max_2p(const Instance& instance, const PredictionPair& predictions) {
    Rational f1 = min_max_p(instance, predictions.left()).facilities().front();
    Rational f2 = min_max_p(instance, predictions.right()).facilities().front();
    return Placement::two(f1, f2);
}

/// MinMax2P with the leftmost prediction censored into [lambda, 1-3*lambda]
/// and the rightmost into [3*lambda, 1-lambda].
inline Placement min_max_2p_lambda(const Instance& instance, const PredictionPair& predictions,
                                   const Rational& lambda) {
    if (lambda < Rational(0) || lambda > Rational(1, 4)) throw InvalidLambdaError();
    Rational three_lambda = lambda * 3;
    Rational left = truncate(predictions.left().value(), lambda, Rational(1) - three_lambda);
    Rational right = truncate(predictions.right().value(), three_lambda, Rational(1) - lambda);
    // The censor maps are monotone and pointwise ordered, so the censored
    // predictions cannot cross.
    assert(left <= right);
    return min_max_2p(instance, PredictionPair(left, right));
}

} // namespace facloc

#endif
