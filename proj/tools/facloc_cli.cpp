// Command-line front end: evaluate mechanisms on concrete instances, verify
// strategy-proofness and worst-case ratios by grid search, sweep trade-off
// curves to CSV, and reproduce the summary table.
//
// Exit codes: 0 success/verified, 1 theorem contradiction or table mismatch
// (or strategy-proofness violations found), 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <facloc/facloc.hpp>

namespace {

using facloc::Bound;
using facloc::Instance;
using facloc::Objective;
using facloc::Rational;

std::string fmt(const Rational& r) { return r.str() + " (" + r.decimal() + ")"; }

std::string fmt(const Bound& b) {
    return b.is_unbounded() ? std::string("unbounded") : fmt(b.value());
}

std::string fmt_agents(const Instance& instance) {
    std::string out;
    for (std::size_t i = 0; i < instance.size(); ++i) {
        if (i) out += ", ";
        out += instance.agents()[i].str();
    }
    return out;
}

std::string fmt_placement(const facloc::Placement& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += p.facilities()[i].str();
    }
    return out;
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(Rational::parse(item));
    if (values.empty()) throw facloc::ParseError("empty list");
    return values;
}

Objective parse_objective(const std::string& name) {
    if (name == "max-distance") return Objective::MaxDistance;
    if (name == "min-utility") return Objective::MinUtility;
    throw facloc::ParseError("objective must be max-distance or min-utility");
}

const char* objective_name(Objective o) {
    return o == Objective::MaxDistance ? "max-distance" : "min-utility";
}

int default_resolution() {
    if (const char* env = std::getenv("FM_RESOLUTION")) {
        int v = std::atoi(env);
        if (v >= 2) return v;
    }
    return 20;
}

/// Approximation ratio of an achieved objective value against the optimum.
Bound ratio_of(const Rational& value, const Rational& optimum, Objective objective) {
    if (objective == Objective::MaxDistance) {
        if (optimum == Rational(0))
            return value == Rational(0) ? Bound::finite(Rational(1)) : Bound::unbounded();
        return Bound::finite(value / optimum);
    }
    if (value == Rational(0)) return Bound::unbounded();
    return Bound::finite(optimum / value);
}

struct Options {
    std::string mechanism;
    std::optional<Rational> param;
    std::optional<std::string> agents;
    std::optional<Rational> pred;
    std::optional<std::string> preds;
    std::optional<std::string> objective;
    int resolution = default_resolution();
    int max_agents = 3;
    int steps = 20;
    std::optional<std::string> params;
    std::optional<std::string> out;
};

std::ostream& open_output(const Options& opt, std::ofstream& file) {
    if (!opt.out) return std::cout;
    file.open(*opt.out);
    if (!file) throw facloc::Error("cannot open output file " + *opt.out);
    return file;
}

facloc::MechanismSpec spec_from(const Options& opt) {
    auto spec = facloc::parse_mechanism(opt.mechanism, opt.param);
    if (!spec) throw facloc::Error("unknown mechanism '" + opt.mechanism + "'");
    return *spec;
}

facloc::PredictionInput predictions_from(const facloc::MechanismSpec& spec,
                                         const Options& opt) {
    switch (facloc::prediction_arity(spec.family)) {
    case facloc::PredictionArity::Single: {
        if (!opt.pred) throw facloc::Error(spec.name() + " needs --pred");
        return facloc::PredictionInput::of(facloc::Prediction(*opt.pred));
    }
    case facloc::PredictionArity::Pair: {
        if (!opt.preds) throw facloc::Error(spec.name() + " needs --preds");
        auto values = parse_list(*opt.preds);
        if (values.size() != 2) throw facloc::Error("--preds needs exactly two values");
        return facloc::PredictionInput::of(facloc::PredictionPair(values[0], values[1]));
    }
    case facloc::PredictionArity::None:
        if (opt.pred || opt.preds)
            throw facloc::Error(spec.name() + " takes no predictions");
        return facloc::PredictionInput::none();
    }
    return facloc::PredictionInput::none();
}

int cmd_run(const Options& opt) {
    auto spec = spec_from(opt);
    if (!opt.agents) throw facloc::Error("run needs --agents");
    Instance instance = facloc::make_instance(parse_list(*opt.agents));
    auto input = predictions_from(spec, opt);

    std::ofstream file;
    std::ostream& os = open_output(opt, file);

    os << "mechanism: " << spec.name() << "\n";
    os << "agents: " << fmt_agents(instance) << "\n";
    if (input.single) os << "prediction: " << input.single->value().str() << "\n";
    if (input.pair)
        os << "predictions: " << input.pair->left().value().str() << ", "
           << input.pair->right().value().str() << "\n";

    facloc::Lottery lottery = facloc::run_mechanism(spec, instance, input);
    if (!facloc::randomized(spec.family)) {
        os << "placement: " << fmt_placement(lottery.outcomes().front().first) << "\n";
    } else {
        os << "lottery:\n";
        for (const auto& [placement, prob] : lottery.outcomes())
            os << "  " << prob.str() << " -> " << fmt_placement(placement) << "\n";
    }

    facloc::OptimumReport opt_report = facloc::facility_count(spec.family) == 2
                                           ? facloc::opt_two(instance)
                                           : facloc::opt_single(instance);
    std::vector<Objective> objectives;
    if (opt.objective)
        objectives.push_back(parse_objective(*opt.objective));
    else
        objectives = {Objective::MaxDistance, Objective::MinUtility};
    for (Objective objective : objectives) {
        Rational value = facloc::expected_value(lottery, instance, objective);
        Rational optimum = objective == Objective::MaxDistance
                               ? opt_report.opt_max_distance
                               : opt_report.opt_min_utility;
        os << objective_name(objective) << ": value " << fmt(value) << " optimum "
           << fmt(optimum) << " ratio " << fmt(ratio_of(value, optimum, objective)) << "\n";
    }
    return 0;
}

int cmd_ratio(const Options& opt, facloc::RatioMode mode) {
    auto spec = spec_from(opt);
    if (!opt.objective) throw facloc::Error("ratio needs --obj");
    Objective objective = parse_objective(*opt.objective);
    facloc::closed_form_bounds(spec, objective); // families without stated bounds are a usage error
    facloc::SearchConfig config;
    config.resolution = opt.resolution;
    config.max_agents = opt.max_agents;
    auto report = facloc::measure_ratio(spec, objective, config, mode);

    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    os << "mechanism: " << spec.name() << "\n";
    os << "objective: " << objective_name(objective) << "\n";
    os << "mode: " << (mode == facloc::RatioMode::Consistency ? "consistency" : "robustness")
       << "\n";
    os << "resolution: " << config.resolution << "  max-agents: " << config.max_agents << "\n";
    os << "closed-form bound: " << fmt(*report.closed_form) << "\n";
    os << "measured: " << fmt(report.measured) << "\n";
    os << "witness instance: " << fmt_agents(report.witness_instance) << "\n";
    if (report.witness_prediction)
        os << "witness prediction: " << report.witness_prediction->value().str() << "\n";
    if (report.witness_predictions)
        os << "witness predictions: " << report.witness_predictions->left().value().str()
           << ", " << report.witness_predictions->right().value().str() << "\n";
    if (report.witness_ratio)
        os << "witness ratio: " << fmt(*report.witness_ratio) << "\n";

    if (!Bound::leq(report.measured, *report.closed_form)) {
        os << "CONTRADICTION: measured exceeds the closed-form bound\n";
        return 1;
    }
    return 0;
}

int cmd_sweep(const Options& opt) {
    auto family_name = facloc::parse_family_name(opt.mechanism);
    if (!family_name) throw facloc::Error("unknown mechanism '" + opt.mechanism + "'");
    facloc::Family family = *family_name;
    if (!opt.objective) throw facloc::Error("sweep needs --obj");
    Objective objective = parse_objective(*opt.objective);

    std::vector<Rational> values;
    if (opt.params) {
        values = parse_list(*opt.params);
    } else {
        if (opt.steps < 1) throw facloc::Error("--steps must be positive");
        Rational hi =
            family == facloc::Family::MinMax2PLambda ? Rational(1, 4) : Rational(1, 2);
        for (int k = 0; k <= opt.steps; ++k)
            values.push_back(hi * Rational(k, opt.steps));
    }
    auto points = facloc::tradeoff_sweep(family, values, objective);

    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    os << "param,consistency,robustness,param_decimal,consistency_decimal,"
          "robustness_decimal\n";
    for (const auto& p : points)
        os << p.param.str() << "," << p.consistency.str() << "," << p.robustness.str() << ","
           << p.param.decimal() << "," << p.consistency.decimal() << ","
           << p.robustness.decimal() << "\n";
    return 0;
}

int cmd_table(const Options& opt) {
    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    facloc::render_table(os);
    auto mismatches = facloc::verify_table();
    for (const auto& m : mismatches) os << "MISMATCH: " << m << "\n";
    if (mismatches.empty()) {
        os << "all computed cells match the stored table\n";
        return 0;
    }
    return 1;
}

int cmd_sp(const Options& opt) {
    auto spec = spec_from(opt);
    facloc::SearchConfig config;
    config.resolution = opt.resolution;
    config.max_agents = opt.max_agents;
    auto violations = facloc::check_strategyproof(spec, config);

    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    os << "mechanism: " << spec.name() << "\n";
    os << "resolution: " << config.resolution << "  max-agents: " << config.max_agents << "\n";
    os << "violations: " << violations.size() << "\n";
    std::size_t shown = 0;
    for (const auto& v : violations) {
        if (shown == 10) {
            os << "  ...\n";
            break;
        }
        os << "  agents " << fmt_agents(v.instance) << ": agent " << v.agent_index
           << " misreports " << v.misreport.str() << ", cost " << v.cost_before.str()
           << " -> " << v.cost_after.str();
        if (v.prediction) os << " (prediction " << v.prediction->value().str() << ")";
        if (v.predictions)
            os << " (predictions " << v.predictions->left().value().str() << ", "
               << v.predictions->right().value().str() << ")";
        os << "\n";
        ++shown;
    }
    return violations.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Egalitarian facility location mechanisms on [0,1]: exact evaluation, "
                 "worst-case verification, trade-off curves"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool needs_mech) {
        if (needs_mech) cmd->add_option("--mech", opt.mechanism, "mechanism name")->required();
        cmd->add_option("--param", [&opt](const std::vector<std::string>& v) {
            opt.param = Rational::parse(v.front());
            return true;
        }, "mechanism parameter (gamma/delta/lambda/theta)");
        cmd->add_option("--out", [&opt](const std::vector<std::string>& v) {
            opt.out = v.front();
            return true;
        }, "write the report to a file");
    };

    auto* run = app.add_subcommand("run", "evaluate a mechanism on one instance");
    add_common(run, true);
    run->add_option("--agents", [&opt](const std::vector<std::string>& v) {
        opt.agents = v.front();
        return true;
    }, "comma-separated agent locations")->required();
    run->add_option("--pred", [&opt](const std::vector<std::string>& v) {
        opt.pred = Rational::parse(v.front());
        return true;
    }, "predicted optimal location");
    run->add_option("--preds", [&opt](const std::vector<std::string>& v) {
        opt.preds = v.front();
        return true;
    }, "two comma-separated predicted locations");
    run->add_option("--obj", [&opt](const std::vector<std::string>& v) {
        opt.objective = v.front();
        return true;
    }, "max-distance or min-utility (default: both)");

    auto* ratio = app.add_subcommand("ratio", "measure worst-case consistency or robustness");
    add_common(ratio, true);
    std::string mode = "robustness";
    ratio->add_option("--mode", mode, "consistency or robustness")
        ->check(CLI::IsMember({"consistency", "robustness"}));
    ratio->add_option("--obj", [&opt](const std::vector<std::string>& v) {
        opt.objective = v.front();
        return true;
    }, "max-distance or min-utility")->required();
    ratio->add_option("--res", opt.resolution, "grid resolution");
    ratio->add_option("--max-agents", opt.max_agents, "largest instance size");

    auto* sweep = app.add_subcommand("sweep", "closed-form trade-off curve as CSV");
    add_common(sweep, true);
    sweep->add_option("--obj", [&opt](const std::vector<std::string>& v) {
        opt.objective = v.front();
        return true;
    }, "max-distance or min-utility")->required();
    sweep->add_option("--steps", opt.steps, "number of parameter steps (default 20)");
    sweep->add_option("--params", [&opt](const std::vector<std::string>& v) {
        opt.params = v.front();
        return true;
    }, "explicit comma-separated parameter list");

    auto* table = app.add_subcommand("table", "render and verify the summary table");
    add_common(table, false);

    auto* sp = app.add_subcommand("sp", "exhaustive strategy-proofness check");
    add_common(sp, true);
    sp->add_option("--res", opt.resolution, "grid resolution");
    sp->add_option("--max-agents", opt.max_agents, "largest instance size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(run)) return cmd_run(opt);
        if (app.got_subcommand(ratio))
            return cmd_ratio(opt, mode == "consistency" ? facloc::RatioMode::Consistency
                                                        : facloc::RatioMode::Robustness);
        if (app.got_subcommand(sweep)) return cmd_sweep(opt);
        if (app.got_subcommand(table)) return cmd_table(opt);
        if (app.got_subcommand(sp)) return cmd_sp(opt);
    } catch (const facloc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
