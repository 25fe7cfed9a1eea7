#ifndef FACLOC_MECHANISM_SPEC_HPP
#define FACLOC_MECHANISM_SPEC_HPP

#include <optional>
#include <string>
#include <string_view>

#include "facloc/lottery.hpp"
#include "facloc/mechanisms.hpp"

namespace facloc {

enum class Family {
    MinMaxP,
    MinMaxPGamma,
    MidOrNearest,
    GenMedian,
    LrmP,
    LrmtP,
    MinMax2P,
    MinMax2PLambda,
    RandEnds,
    RandEnds2P,
    BrokenThird, // negative control: facility at x_1 + (x_n-x_1)/3, not strategy proof
};

enum class PredictionArity { None, Single, Pair };

inline PredictionArity prediction_arity(Family family) {
    switch (family) {
    case Family::MinMaxP:
    case Family::MinMaxPGamma:
    case Family::LrmP:
    case Family::LrmtP:
        return PredictionArity::Single;
    case Family::MinMax2P:
    case Family::MinMax2PLambda:
    case Family::RandEnds2P:
        return PredictionArity::Pair;
    default:
        return PredictionArity::None;
    }
}

inline std::size_t facility_count(Family family) {
    switch (family) {
    case Family::MinMax2P:
    case Family::MinMax2PLambda:
    case Family::RandEnds:
    case Family::RandEnds2P:
        return 2;
    default:
        return 1;
    }
}

inline bool randomized(Family family) {
    switch (family) {
    case Family::LrmP:
    case Family::LrmtP:
    case Family::RandEnds:
    case Family::RandEnds2P:
        return true;
    default:
        return false;
    }
}

inline bool parameterized(Family family) {
    switch (family) {
    case Family::MinMaxPGamma:
    case Family::LrmP:
    case Family::LrmtP:
    case Family::MinMax2PLambda:
    case Family::RandEnds2P:
        return true;
    default:
        return false;
    }
}

/// The ten mechanisms the closed-form and strategy-proofness results cover;
/// excludes the negative control.
inline bool paper_family(Family family) { return family != Family::BrokenThird; }

inline const char* family_name(Family family) {
    switch (family) {
    case Family::MinMaxP: return "minmaxp";
    case Family::MinMaxPGamma: return "minmaxp-gamma";
    case Family::MidOrNearest: return "midornearest";
    case Family::GenMedian: return "genmedian";
    case Family::LrmP: return "lrmp";
    case Family::LrmtP: return "lrmtp";
    case Family::MinMax2P: return "minmax2p";
    case Family::MinMax2PLambda: return "minmax2p-lambda";
    case Family::RandEnds: return "randends";
    case Family::RandEnds2P: return "randends2p";
    case Family::BrokenThird: return "broken-third";
    }
    return "?";
}

inline const char* preset_name(Preset preset) {
    switch (preset) {
    case Preset::Leftmost: return "leftmost";
    case Preset::Rightmost: return "rightmost";
    case Preset::Median: return "median";
    case Preset::MidOrNearest: return "midornearest";
    }
    return "?";
}

/// A concrete mechanism: family plus parameter (gamma/delta/lambda/theta)
/// where the family takes one, plus the phantom preset for GenMedian.
struct MechanismSpec {
    Family family;
    std::optional<Rational> param;
    std::optional<Preset> preset;

    static MechanismSpec make(Family family, std::optional<Rational> param = {},
                              std::optional<Preset> preset = {}) {
        if (parameterized(family)) {
            if (!param) throw Error(std::string(family_name(family)) + " requires a parameter");
            switch (family) {
            case Family::MinMaxPGamma:
                if (*param < Rational(0) || *param > Rational(1, 2)) throw InvalidGammaError();
                break;
            case Family::LrmP:
            case Family::LrmtP:
                if (*param < Rational(0) || *param > Rational(1, 2)) throw InvalidDeltaError();
                break;
            case Family::MinMax2PLambda:
                if (*param < Rational(0) || *param > Rational(1, 4)) throw InvalidLambdaError();
                break;
            case Family::RandEnds2P:
                if (*param < Rational(0) || *param > Rational(1, 2)) throw InvalidThetaError();
                break;
            default: break;
            }
        } else if (param) {
            throw Error(std::string(family_name(family)) + " takes no parameter");
        }
        if (family == Family::GenMedian) {
            if (!preset) throw Error("genmedian requires a phantom preset");
        } else if (preset) {
            throw Error(std::string(family_name(family)) + " takes no phantom preset");
        }
        return {family, param, preset};
    }

    std::string name() const {
        std::string out = family == Family::GenMedian ? preset_name(*preset)
                                                      : family_name(family);
        if (param) out += " (param " + param->str() + ")";
        return out;
    }
};

/// Prediction input for a mechanism run; which field is required depends on
/// the family's prediction arity.
struct PredictionInput {
    std::optional<Prediction> single;
    std::optional<PredictionPair> pair;

    static PredictionInput none() { return {}; }
    static PredictionInput of(Prediction p) { return {p, {}}; }
    static PredictionInput of(PredictionPair p) { return {{}, p}; }
};

inline void require_predictions(const MechanismSpec& spec, const PredictionInput& input) {
    switch (prediction_arity(spec.family)) {
    case PredictionArity::Single:
        if (!input.single) throw Error(spec.name() + " requires a prediction");
        break;
    case PredictionArity::Pair:
        if (!input.pair) throw Error(spec.name() + " requires two predictions");
        break;
    case PredictionArity::None:
        break;
    }
}

/// Placement of a deterministic mechanism; throws for randomized families.
inline Placement run_deterministic(const MechanismSpec& spec, const Instance& instance,
                                   const PredictionInput& input = {}) {
    require_predictions(spec, input);
    switch (spec.family) {
    case Family::MinMaxP:
        return min_max_p(instance, *input.single);
    case Family::MinMaxPGamma:
        return min_max_p_gamma(instance, *input.single, *spec.param);
    case Family::MidOrNearest:
        return preset(instance, Preset::MidOrNearest);
    case Family::GenMedian:
        return preset(instance, *spec.preset);
    case Family::MinMax2P:
        return min_max_2p(instance, *input.pair);
    case Family::MinMax2PLambda:
        return min_max_2p_lambda(instance, *input.pair, *spec.param);
    case Family::BrokenThird:
        return Placement::single(instance.leftmost() +
                                 (instance.rightmost() - instance.leftmost()) / 3);
    default:
        throw Error(spec.name() + " is randomized; use run_mechanism");
    }
}

/// Uniform entry point: deterministic mechanisms come back as point masses.
inline Lottery run_mechanism(const MechanismSpec& spec, const Instance& instance,
                             const PredictionInput& input = {}) {
    require_predictions(spec, input);
    switch (spec.family) {
    case Family::LrmP:
        return lrm_p(instance, *input.single, *spec.param);
    case Family::LrmtP:
        return lrmt_p(instance, *input.single, *spec.param);
    case Family::RandEnds:
        return rand_ends(instance);
    case Family::RandEnds2P:
        return rand_ends_2p(instance, *input.pair, *spec.param);
    default:
        return Lottery::point_mass(run_deterministic(spec, instance, input));
    }
}

/// Family behind a CLI mechanism name, ignoring any parameter.
inline std::optional<Family> parse_family_name(std::string_view name) {
    if (name == "minmaxp") return Family::MinMaxP;
    if (name == "minmaxp-gamma") return Family::MinMaxPGamma;
    if (name == "midornearest") return Family::MidOrNearest;
    if (name == "leftmost" || name == "rightmost" || name == "median")
        return Family::GenMedian;
    if (name == "lrm" || name == "lrmp") return Family::LrmP;
    if (name == "lrmt" || name == "lrmtp") return Family::LrmtP;
    if (name == "minmax2p") return Family::MinMax2P;
    if (name == "minmax2p-lambda") return Family::MinMax2PLambda;
    if (name == "randends") return Family::RandEnds;
    if (name == "randends2p") return Family::RandEnds2P;
    if (name == "broken-third") return Family::BrokenThird;
    return std::nullopt;
}

/// Mechanism names accepted by the CLI. "lrm" and "lrmt" are the delta=1/2
/// instances of LrmP/LrmtP; the preset names select GenMedian profiles.
inline std::optional<MechanismSpec> parse_mechanism(std::string_view name,
                                                    std::optional<Rational> param) {
    auto fixed = [&](Family f, const Rational& p) {
        if (param && *param != p)
            throw Error(std::string(name) + " has a fixed parameter " + p.str());
        return MechanismSpec::make(f, p);
    };
    if (name == "minmaxp") return MechanismSpec::make(Family::MinMaxP, param);
    if (name == "minmaxp-gamma") return MechanismSpec::make(Family::MinMaxPGamma, param);
    if (name == "midornearest") return MechanismSpec::make(Family::MidOrNearest, param);
    if (name == "leftmost") return MechanismSpec::make(Family::GenMedian, param, Preset::Leftmost);
    if (name == "rightmost") return MechanismSpec::make(Family::GenMedian, param, Preset::Rightmost);
    if (name == "median") return MechanismSpec::make(Family::GenMedian, param, Preset::Median);
    if (name == "lrmp") return MechanismSpec::make(Family::LrmP, param);
    if (name == "lrmtp") return MechanismSpec::make(Family::LrmtP, param);
    if (name == "lrm") return fixed(Family::LrmP, Rational(1, 2));
    if (name == "lrmt") return fixed(Family::LrmtP, Rational(1, 2));
    if (name == "minmax2p") return MechanismSpec::make(Family::MinMax2P, param);
    if (name == "minmax2p-lambda") return MechanismSpec::make(Family::MinMax2PLambda, param);
    if (name == "randends") return MechanismSpec::make(Family::RandEnds, param);
    if (name == "randends2p") return MechanismSpec::make(Family::RandEnds2P, param);
    if (name == "broken-third") return MechanismSpec::make(Family::BrokenThird, param);
    return std::nullopt;
}

} // namespace facloc

#endif
