#ifndef FACLOC_FACLOC_HPP
#define FACLOC_FACLOC_HPP

// Egalitarian facility location on the unit interval: exact-arithmetic
// mechanisms with predictions, closed-form consistency/robustness bounds,
// and brute-force adversarial verification.

#include "facloc/bounds.hpp"
#include "facloc/core.hpp"
#include "facloc/counterexamples.hpp"
#include "facloc/errors.hpp"
#include "facloc/lottery.hpp"
#include "facloc/mechanism_spec.hpp"
#include "facloc/mechanisms.hpp"
#include "facloc/rational.hpp"
#include "facloc/search.hpp"
#include "facloc/table.hpp"

#endif
