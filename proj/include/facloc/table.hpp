#ifndef FACLOC_TABLE_HPP
#define FACLOC_TABLE_HPP

#include <array>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "facloc/bounds.hpp"

namespace facloc {

// The summary table of consistency/robustness results. Cell order is
// (max-distance consistency, max-distance robustness, min-utility
// consistency, min-utility robustness). Lower-bound rows are prior
// impossibility results with no mechanism to run; they are rendered with a
// "cited" flag and never verified. Every other cell is stored here
// independently and checked against closed_form_bounds.

struct TableRow {
    std::string section;
    std::string label;
    bool cited = false;
    std::array<std::string, 4> display;

    // fixed rows: one mechanism, four stored bounds
    std::optional<MechanismSpec> spec;
    std::optional<std::array<Bound, 4>> expected;

    // parametric rows: stored formulas checked at sample parameters
    std::optional<Family> family;
    std::vector<Rational> samples;
    std::function<std::array<Bound, 4>(const Rational&)> formula;
};

inline std::array<Bound, 4> cells_of(const MechanismSpec& spec) {
    BoundsPair md = closed_form_bounds(spec, Objective::MaxDistance);
    BoundsPair mu = closed_form_bounds(spec, Objective::MinUtility);
    return {md.consistency, md.robustness, mu.consistency, mu.robustness};
}

inline std::vector<TableRow> summary_table() {
    auto fin = [](std::int64_t n, std::int64_t d = 1) { return Bound::finite(Rational(n, d)); };
    const Bound inf = Bound::unbounded();
    std::vector<TableRow> rows;

    auto cited = [&](std::string section, std::array<std::string, 4> cells) {
        rows.push_back({std::move(section), "lower bound", true, std::move(cells),
                        {}, {}, {}, {}, {}});
    };
    auto fixed = [&](std::string section, std::string label, MechanismSpec spec,
                     std::array<Bound, 4> expected) {
        std::array<std::string, 4> display;
        for (std::size_t i = 0; i < 4; ++i) display[i] = expected[i].str();
        rows.push_back({std::move(section), std::move(label), false, std::move(display),
                        std::move(spec), expected, {}, {}, {}});
    };
    auto parametric = [&](std::string section, std::string label, Family family,
                          std::array<std::string, 4> display, std::vector<Rational> samples,
                          std::function<std::array<Bound, 4>(const Rational&)> formula) {
        rows.push_back({std::move(section), std::move(label), false, std::move(display),
                        {}, {}, family, std::move(samples), std::move(formula)});
    };

    const std::string d1 = "1 facility, deterministic";
    cited(d1, {"1/1", "2/1", "1/1", "3/2"});
    fixed(d1, "MinMaxP", MechanismSpec::make(Family::MinMaxP),
          {fin(1), fin(2), fin(1), inf});
    fixed(d1, "MidOrNearest", MechanismSpec::make(Family::MidOrNearest),
          {fin(2), fin(2), fin(3, 2), fin(3, 2)});
    parametric(d1, "MinMaxP_g, g>0", Family::MinMaxPGamma,
               {"2/1", "2/1", "(2-g)/(2-2g)", "(1+g)/(2g)"},
               {Rational(1, 8), Rational(1, 4), Rational(3, 8)},
               [](const Rational& g) -> std::array<Bound, 4> {
                   return {Bound::finite(2), Bound::finite(2),
                           Bound::finite((Rational(2) - g) / (Rational(2) - g * 2)),
                           Bound::finite((Rational(1) + g) / (g * 2))};
               });
    fixed(d1, "MinMaxP_g, g=1/2", MechanismSpec::make(Family::MinMaxPGamma, Rational(1, 2)),
          {fin(2), fin(2), fin(3, 2), fin(3, 2)});

    const std::string r1 = "1 facility, randomized";
    cited(r1, {"1/1", "3/2", "1/1", "4/3"});
    parametric(r1, "LrmP", Family::LrmP,
               {"1+d", "2-d", "1/(1-d)", "1/d"},
               {Rational(1, 8), Rational(1, 4), Rational(3, 8)},
               [](const Rational& d) -> std::array<Bound, 4> {
                   return {Bound::finite(Rational(1) + d), Bound::finite(Rational(2) - d),
                           Bound::finite(Rational(1) / (Rational(1) - d)),
                           Bound::finite(Rational(1) / d)};
               });
    fixed(r1, "LrmP, d=1/2", MechanismSpec::make(Family::LrmP, Rational(1, 2)),
          {fin(3, 2), fin(3, 2), fin(2), fin(2)});
    parametric(r1, "LrmtP", Family::LrmtP,
               {"1+2d", "2/1", "2/(2-d)", "2/(3d)"},
               {Rational(1, 8), Rational(1, 4), Rational(3, 8)},
               [](const Rational& d) -> std::array<Bound, 4> {
                   return {Bound::finite(Rational(1) + d * 2), Bound::finite(2),
                           Bound::finite(Rational(2) / (Rational(2) - d)),
                           Bound::finite(Rational(2) / (d * 3))};
               });
    fixed(r1, "LrmtP, d=1/2", MechanismSpec::make(Family::LrmtP, Rational(1, 2)),
          {fin(2), fin(2), fin(4, 3), fin(4, 3)});

    const std::string d2 = "2 facilities, deterministic";
    cited(d2, {"1/1", "n-2", "1/1", "10/9"});
    fixed(d2, "MinMax2P", MechanismSpec::make(Family::MinMax2P),
          {fin(1), inf, fin(1), fin(3, 2)});
    parametric(d2, "MinMax2P_l, l>0", Family::MinMax2PLambda,
               {"inf", "inf", "(2-l)/(2-2l)", "(3+2l)/(2(1+2l))"},
               {Rational(1, 16), Rational(1, 8), Rational(3, 16)},
               [inf](const Rational& l) -> std::array<Bound, 4> {
                   return {inf, inf,
                           Bound::finite((Rational(2) - l) / (Rational(2) - l * 2)),
                           Bound::finite((Rational(3) + l * 2) / ((Rational(1) + l * 2) * 2))};
               });
    fixed(d2, "MinMax2P_l, l=1/4", MechanismSpec::make(Family::MinMax2PLambda, Rational(1, 4)),
          {inf, inf, fin(7, 6), fin(7, 6)});

    const std::string r2 = "2 facilities, randomized";
    cited(r2, {"1/1", "3/2", "1/1", "10/9"});
    fixed(r2, "RandEnds2P, t=0", MechanismSpec::make(Family::RandEnds2P, Rational(0)),
          {fin(1), inf, fin(1), fin(3, 2)});
    parametric(r2, "RandEnds2P, t<1/2", Family::RandEnds2P,
               {"(3+4t)/3", "inf", "9/(9-4t)", "9/(2(3+t))"},
               {Rational(1, 8), Rational(1, 4), Rational(3, 8)},
               [inf](const Rational& t) -> std::array<Bound, 4> {
                   return {Bound::finite((Rational(3) + t * 4) / 3), inf,
                           Bound::finite(Rational(9) / (Rational(9) - t * 4)),
                           Bound::finite(Rational(9) / ((Rational(3) + t) * 2))};
               });
    fixed(r2, "RandEnds2P, t=1/2", MechanismSpec::make(Family::RandEnds2P, Rational(1, 2)),
          {fin(5, 3), fin(5, 3), fin(9, 7), fin(9, 7)});

    return rows;
}

/// Compare every computed cell against its stored value; returns one message
/// per mismatch (empty means the table reproduces exactly).
inline std::vector<std::string> verify_table() {
    static const char* kCellNames[4] = {"max-distance consistency", "max-distance robustness",
                                        "min-utility consistency", "min-utility robustness"};
    std::vector<std::string> mismatches;
    for (const auto& row : summary_table()) {
        if (row.cited) continue;
        if (row.spec) {
            std::array<Bound, 4> got = cells_of(*row.spec);
            for (std::size_t i = 0; i < 4; ++i)
                if (got[i] != (*row.expected)[i])
                    mismatches.push_back(row.label + ": " + kCellNames[i] + " computed " +
                                         got[i].str() + ", table says " +
                                         (*row.expected)[i].str());
        } else {
            for (const auto& p : row.samples) {
                std::array<Bound, 4> want = row.formula(p);
                std::array<Bound, 4> got = cells_of(MechanismSpec::make(*row.family, p));
                for (std::size_t i = 0; i < 4; ++i)
                    if (got[i] != want[i])
                        mismatches.push_back(row.label + " at " + p.str() + ": " +
                                             kCellNames[i] + " computed " + got[i].str() +
                                             ", table says " + want[i].str());
            }
        }
    }
    return mismatches;
}

inline void render_table(std::ostream& os) {
    std::string section;
    os << std::left << std::setw(22) << "mechanism" << std::setw(14) << "maxdist-cons"
       << std::setw(14) << "maxdist-rob" << std::setw(18) << "minutil-cons"
       << std::setw(18) << "minutil-rob" << "note\n";
    for (const auto& row : summary_table()) {
        if (row.section != section) {
            section = row.section;
            os << "-- " << section << "\n";
        }
        os << std::left << std::setw(22) << row.label;
        for (std::size_t i = 0; i < 4; ++i)
            os << std::setw(i < 2 ? 14 : 18) << row.display[i];
        os << (row.cited ? "cited, not verified" : "computed") << "\n";
    }
}

} // namespace facloc

#endif
