#ifndef FACLOC_SEARCH_HPP
#define FACLOC_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "facloc/bounds.hpp"
#include "facloc/mechanism_spec.hpp"

namespace facloc {

struct SearchConfig {
    int resolution = 20; // grid step 1/resolution
    int max_agents = 3;
    Rational tolerance = Rational(0);
    Rational divergence_threshold = Rational(100);

    void validate() const {
        if (resolution < 2) throw Error("grid resolution must be at least 2");
        if (max_agents < 1) throw Error("max_agents must be at least 1");
        if (tolerance < Rational(0)) throw Error("tolerance must be nonnegative");
    }
};

enum class RatioMode { Consistency, Robustness };

/// Result of a worst-case ratio search: the measured ratio, the stated bound
/// (when the family has one), and the lexicographically smallest grid point
/// attaining the measurement. witness_ratio is absent only when the witness
/// is a zero-denominator hit (minimum utility zero, or a non-exact placement
/// on a zero-optimum max-distance instance).
struct RatioReport {
    Bound measured;
    std::optional<Bound> closed_form;
    Instance witness_instance;
    std::optional<Prediction> witness_prediction;
    std::optional<PredictionPair> witness_predictions;
    std::optional<Rational> witness_ratio;
};

struct Violation {
    Instance instance;
    std::size_t agent_index; // into the sorted agent list
    Rational misreport;
    Rational cost_before;
    Rational cost_after;
    std::optional<Prediction> prediction;
    std::optional<PredictionPair> predictions;
};

namespace detail {

/// Visit all sorted index tuples 0 <= i_1 <= ... <= i_n <= resolution in
/// lexicographic order.
template <typename Fn>
void for_each_sorted_tuple(int resolution, int n, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    const std::vector<int>& view = idx;
    for (;;) {
        fn(view);
        int pos = n - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == resolution) --pos;
        if (pos < 0) return;
        int v = ++idx[static_cast<std::size_t>(pos)];
        for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < idx.size(); ++j)
            idx[j] = v;
    }
}

inline Instance instance_from_indices(const std::vector<int>& idx, int resolution) {
    std::vector<Rational> agents;
    agents.reserve(idx.size());
    for (int i : idx) agents.emplace_back(i, resolution);
    return Instance(std::move(agents));
}

/// Exact expected objective value with the prediction-independent part
/// (Lrm/Lrmt/RandEnds expectation) computed once per instance.
class ValueEvaluator {
public:
    ValueEvaluator(const MechanismSpec& spec, const Instance& instance, Objective objective)
        : spec_(spec), instance_(instance), objective_(objective) {
        switch (spec.family) {
        case Family::LrmP:
            base_ = expected_value(lrm(instance), instance, objective);
            break;
        case Family::LrmtP:
            base_ = expected_value(lrmt(instance), instance, objective);
            break;
        case Family::RandEnds:
        case Family::RandEnds2P:
            base_ = expected_value(rand_ends(instance), instance, objective);
            break;
        default:
            break;
        }
    }

    Rational operator()(const PredictionInput& input) const {
        switch (spec_.family) {
        case Family::LrmP:
        case Family::LrmtP: {
            Rational w = *spec_.param * 2;
            Rational det = evaluate(instance_, min_max_p(instance_, *input.single), objective_);
            return w * (*base_) + (Rational(1) - w) * det;
        }
        case Family::RandEnds:
            return *base_;
        case Family::RandEnds2P: {
            Rational w = *spec_.param * 2;
            Rational det = evaluate(instance_, min_max_2p(instance_, *input.pair), objective_);
            return w * (*base_) + (Rational(1) - w) * det;
        }
        default:
            return evaluate(instance_, run_deterministic(spec_, instance_, input), objective_);
        }
    }

private:
    const MechanismSpec& spec_;
    const Instance& instance_;
    Objective objective_;
    std::optional<Rational> base_;
};

} // namespace detail

/// Worst approximation ratio of the mechanism over all grid instances with
/// up to max_agents agents. Consistency fixes predictions to the instance's
/// exact optimum; robustness additionally ranges over all grid predictions.
inline RatioReport measure_ratio(const MechanismSpec& spec, Objective objective,
                                 const SearchConfig& config, RatioMode mode) {
    config.validate();
    std::optional<Bound> closed;
    try {
        BoundsPair cf = closed_form_bounds(spec, objective);
        closed = mode == RatioMode::Consistency ? cf.consistency : cf.robustness;
    } catch (const UnknownFamilyError&) {
    }

    const bool two_facilities = facility_count(spec.family) == 2;
    const PredictionArity arity = prediction_arity(spec.family);
    const bool scan_predictions = mode == RatioMode::Robustness && arity != PredictionArity::None;

    struct Hit {
        Rational ratio;
        Instance instance;
        std::optional<Prediction> pred;
        std::optional<PredictionPair> preds;
    };
    std::optional<Hit> best;
    std::optional<RatioReport> diverged;

    auto unbounded_report = [&](const Instance& inst, std::optional<Prediction> p,
                                std::optional<PredictionPair> pp,
                                std::optional<Rational> ratio) {
        return RatioReport{Bound::unbounded(), closed, inst, p, pp, ratio};
    };

    for (int n = 1; n <= config.max_agents && !diverged; ++n) {
        detail::for_each_sorted_tuple(config.resolution, n, [&](const std::vector<int>& idx) {
            if (diverged) return;
            Instance inst = detail::instance_from_indices(idx, config.resolution);
            OptimumReport opt = two_facilities ? opt_two(inst) : opt_single(inst);
            Rational opt_value = objective == Objective::MaxDistance ? opt.opt_max_distance
                                                                     : opt.opt_min_utility;
            detail::ValueEvaluator value_of(spec, inst, objective);

            auto consider = [&](const PredictionInput& input, std::optional<Prediction> p,
                                std::optional<PredictionPair> pp) {
                if (diverged) return;
                Rational value = value_of(input);
                Rational ratio(1);
                if (objective == Objective::MaxDistance) {
                    if (opt_value == Rational(0)) {
                        // Zero-optimum policy: exact placements count as ratio 1,
                        // anything else makes the multiplicative error unbounded.
                        if (value != Rational(0)) {
                            diverged = unbounded_report(inst, p, pp, std::nullopt);
                            return;
                        }
                    } else {
                        ratio = value / opt_value;
                    }
                } else {
                    if (value == Rational(0)) {
                        diverged = unbounded_report(inst, p, pp, std::nullopt);
                        return;
                    }
                    ratio = opt_value / value;
                }
                if (!best || ratio > best->ratio) best = Hit{ratio, inst, p, pp};
            };

            if (!scan_predictions) {
                switch (arity) {
                case PredictionArity::None:
                    consider(PredictionInput::none(), {}, {});
                    break;
                case PredictionArity::Single: {
                    // The correct prediction is the exact optimal location,
                    // not a grid-rounded one. Single-prediction families place
                    // one facility, so opt is the single-facility optimum.
                    Prediction p(opt.placement.facilities().front());
                    consider(PredictionInput::of(p), p, {});
                    break;
                }
                case PredictionArity::Pair: {
                    PredictionPair pp(opt.placement.facilities()[0],
                                      opt.placement.facilities()[1]);
                    consider(PredictionInput::of(pp), {}, pp);
                    break;
                }
                }
            } else if (arity == PredictionArity::Single) {
                for (int i = 0; i <= config.resolution && !diverged; ++i) {
                    Prediction p(Rational(i, config.resolution));
                    consider(PredictionInput::of(p), p, {});
                }
            } else {
                for (int i = 0; i <= config.resolution && !diverged; ++i)
                    for (int j = i; j <= config.resolution && !diverged; ++j) {
                        PredictionPair pp(Rational(i, config.resolution),
                                          Rational(j, config.resolution));
                        consider(PredictionInput::of(pp), {}, pp);
                    }
            }
        });
    }

    if (diverged) return *diverged;
    // max_agents >= 1, so at least the singleton instances were scored
    if (best->ratio > config.divergence_threshold)
        return RatioReport{Bound::unbounded(), closed,          best->instance,
                           best->pred,         best->preds,     best->ratio};
    return RatioReport{Bound::finite(best->ratio), closed,      best->instance,
                       best->pred,                 best->preds, best->ratio};
}

inline RatioReport measure_consistency(const MechanismSpec& spec, Objective objective,
                                       const SearchConfig& config) {
    return measure_ratio(spec, objective, config, RatioMode::Consistency);
}

inline RatioReport measure_robustness(const MechanismSpec& spec, Objective objective,
                                      const SearchConfig& config) {
    return measure_ratio(spec, objective, config, RatioMode::Robustness);
}

/// Exhaustive strategy-proofness check: every grid instance with up to
/// max_agents agents, every prediction, every agent, every grid misreport.
/// The deviator's expected distance to the nearest facility must never
/// strictly decrease. Returns every violation found, in deterministic order.
inline std::vector<Violation> check_strategyproof(const MechanismSpec& spec,
                                                  const SearchConfig& config) {
    config.validate();
    std::vector<Violation> violations;
    const int res = config.resolution;
    const PredictionArity arity = prediction_arity(spec.family);

    for (int n = 1; n <= config.max_agents; ++n) {
        // Index all sorted n-tuples so a misreported instance can be looked
        // up instead of re-running the mechanism.
        std::vector<std::vector<int>> tuples;
        std::vector<Instance> instances;
        std::size_t codes = 1;
        for (int i = 0; i < n; ++i) codes *= static_cast<std::size_t>(res + 1);
        std::vector<std::int32_t> index_of(codes, -1);
        auto code_of = [&](const std::vector<int>& idx) {
            std::size_t c = 0;
            for (int v : idx) c = c * static_cast<std::size_t>(res + 1) + static_cast<std::size_t>(v);
            return c;
        };
        detail::for_each_sorted_tuple(res, n, [&](const std::vector<int>& idx) {
            index_of[code_of(idx)] = static_cast<std::int32_t>(tuples.size());
            tuples.push_back(idx);
            instances.push_back(detail::instance_from_indices(idx, res));
        });

        std::vector<Lottery> lots;
        lots.reserve(tuples.size());

        auto check_prediction = [&](const PredictionInput& input,
                                    std::optional<Prediction> p,
                                    std::optional<PredictionPair> pp) {
            lots.clear();
            for (const auto& inst : instances) lots.push_back(run_mechanism(spec, inst, input));

            std::vector<int> modified(static_cast<std::size_t>(n));
            for (std::size_t t = 0; t < tuples.size(); ++t) {
                const auto& idx = tuples[t];
                for (std::size_t a = 0; a < idx.size(); ++a) {
                    if (a > 0 && idx[a] == idx[a - 1]) continue; // duplicate agent, same checks
                    Rational true_loc(idx[a], res);
                    Rational cost_before = expected_cost(lots[t], true_loc);
                    if (cost_before == Rational(0)) continue; // cannot improve on zero
                    for (int mis = 0; mis <= res; ++mis) {
                        if (mis == idx[a]) continue;
                        modified = idx;
                        modified[a] = mis;
                        std::sort(modified.begin(), modified.end());
                        std::int32_t mt = index_of[code_of(modified)];
                        Rational cost_after = expected_cost(lots[static_cast<std::size_t>(mt)],
                                                            true_loc);
                        if (cost_after < cost_before)
                            violations.push_back({instances[t], a, Rational(mis, res),
                                                  cost_before, cost_after, p, pp});
                    }
                }
            }
        };

        switch (arity) {
        case PredictionArity::None:
            check_prediction(PredictionInput::none(), {}, {});
            break;
        case PredictionArity::Single:
            for (int i = 0; i <= res; ++i) {
                Prediction p(Rational(i, res));
                check_prediction(PredictionInput::of(p), p, {});
            }
            break;
        case PredictionArity::Pair:
            for (int i = 0; i <= res; ++i)
                for (int j = i; j <= res; ++j) {
                    PredictionPair pp(Rational(i, res), Rational(j, res));
                    check_prediction(PredictionInput::of(pp), {}, pp);
                }
            break;
        }
    }
    return violations;
}

} // namespace facloc

#endif
