#ifndef FACLOC_COUNTEREXAMPLES_HPP
#define FACLOC_COUNTEREXAMPLES_HPP

#include <cstddef>
#include <vector>

#include "facloc/bounds.hpp"
#include "facloc/mechanisms.hpp"

namespace facloc {

// Witness constructors for the two negative results about generalized median
// mechanisms: no phantom profile other than all-phantoms-at-1/2 matches
// MidOrNearest's min-utility guarantee, and for non-extreme predictions no
// profile other than all-phantoms-at-the-prediction beats 2-consistency on
// max distance.

/// Generalized median mechanism whose smallest phantom a differs from 1/2:
/// on n-1 agents at a and one agent at 1 it places the facility at a, with
/// min-utility ratio (1+a)/(2a).
struct UniquenessWitness {
    Rational phantom;
    Instance instance;
    PhantomProfile phantoms;
    Bound ratio;
};

inline UniquenessWitness uniqueness_counterexample(const Rational& a, std::size_t n) {
    if (a < Rational(0) || a >= Rational(1, 2))
        throw InvalidCaseError("phantom must lie in [0, 1/2); at 1/2 the mechanism is MidOrNearest");
    if (n < 2) throw InvalidCaseError("need at least two agents");
    std::vector<Rational> agents(n - 1, a);
    agents.push_back(Rational(1));
    std::vector<Rational> phantoms(n - 1, a);
    Bound ratio = a == Rational(0) ? Bound::unbounded()
                                   : Bound::finite((Rational(1) + a) / (a * 2));
    return {a, Instance(std::move(agents)), PhantomProfile(std::move(phantoms)), ratio};
}

/// The three witness instances against a profile whose largest phantom rho
/// differs from a correct, non-extreme prediction pi <= 1/2. Each makes the
/// mechanism place the facility at twice the optimal maximum distance from
/// some agent (ratio exactly 2).
enum class OffPhantomCase {
    PhantomBelow,       // rho < pi
    PhantomWithinTwice, // pi < rho <= 2*pi
    PhantomBeyondTwice, // rho > 2*pi
};

struct ConsistencyWitness {
    OffPhantomCase which;
    Rational phantom;
    Prediction prediction;    // the correct prediction, i.e. the optimal location
    Instance instance;
    PhantomProfile phantoms;  // one phantom at rho, the rest at pi
    Rational ratio;           // always 2
};

inline ConsistencyWitness consistency_counterexample(const Rational& rho, const Rational& pi,
                                                     std::size_t n) {
    if (pi <= Rational(0) || pi > Rational(1, 2))
        throw InvalidCaseError("prediction must be non-extreme and at most 1/2");
    if (!in_unit_interval(rho)) throw InvalidCaseError("phantom outside [0,1]");
    if (rho == pi) throw InvalidCaseError("phantom equals the prediction");
    if (n < 2) throw InvalidCaseError("need at least two agents");

    Rational two_pi = pi * 2;
    OffPhantomCase which;
    std::vector<Rational> agents;
    if (rho < pi) {
        which = OffPhantomCase::PhantomBelow;
        agents.assign(n - 1, rho);
        agents.push_back(two_pi - rho);
    } else if (rho <= two_pi) {
        which = OffPhantomCase::PhantomWithinTwice;
        agents.assign(n - 1, rho);
        agents.push_back(two_pi - rho);
    } else {
        which = OffPhantomCase::PhantomBeyondTwice;
        agents.assign(n - 1, two_pi);
        agents.push_back(Rational(0));
    }
    std::vector<Rational> phantoms(n - 1, pi);
    phantoms[0] = rho;
    return {which,
            rho,
            Prediction(pi),
            Instance(std::move(agents)),
            PhantomProfile(std::move(phantoms)),
            Rational(2)};
}

} // namespace facloc

#endif
