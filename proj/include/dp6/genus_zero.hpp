#pragma once

#include "dp6/cache.hpp"
#include "dp6/engine.hpp"
#include "dp6/tangency.hpp"

namespace dp6 {

// Independent evaluator of the genus-zero invariant N(D, 0, alpha, beta),
// built on the rational-curve specialization in which every line-pencil
// cover is resummed into closed-form prefactors (alpha0/beta0) instead of
// appearing as an explicit summand.  Intermediate arithmetic is exact
// rational; integrality of every term is asserted.
//
// Cross-validates the general engine; shares no enumeration code with it.
Int evaluate0(const DivisorClass& D, const TangencyVector& alpha, const TangencyVector& beta,
              MemoCache& memo, EvalStats* stats = nullptr);

}  // namespace dp6
