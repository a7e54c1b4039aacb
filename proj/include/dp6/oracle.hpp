#pragma once

#include "dp6/arith.hpp"

namespace dp6 {

// Number of rational plane curves of degree d through 3d-1 generic points,
// computed by the standard quadratic recursion seeded with N_1 = 1.
// Throws std::invalid_argument for d < 1.
Int kontsevich(int d);

// Closed form 4^n * C(n+2, 2).
Int closed_form_blowup(int n);

// Checks the binomial identity
//   4^n C(n+2,2) = sum_{m=0}^{n} 2^m sum_{k=0}^{n-m} C(k+3,3) C(2n+4-m, n-m-k)
// by exact evaluation of both sides.
bool lando_identity(int n);

}  // namespace dp6
