#pragma once

#include <compare>
#include <vector>

#include "dp6/quadruple.hpp"

namespace dp6 {

// One summand of a degeneration: the component's own data plus the contact
// orders gamma along which it is glued to the split-off copy of the conic.
struct Part {
    Quadruple q;
    TangencyVector gamma;

    friend auto operator<=>(const Part&, const Part&) = default;
};

struct Splitting {
    int k = 0;                 // multiplicity dropped onto the two conic-tangent pencil lines
    std::vector<Part> parts;   // canonically sorted; one representative per permutation class
};

// All second-sum configurations for the query, each permutation class
// exactly once, in a deterministic strictly increasing order.
// genus_offset selects the gluing-genus bookkeeping: with offset o the parts
// satisfy sum(g_i) = g - sum||gamma_i|| + m - 1 - o (default -1).
// Preconditions: r_dim(query) > 0 and query is not the special R=1 family.
std::vector<Splitting> enumerate_splittings(const Quadruple& query, int genus_offset = -1);

// Number of distinct orderings of the part multiset (m! over the repetition
// factorials); used by traces and brute-force cross-checks only.
Int splitting_multiplicity(const Splitting& s);

// Serialized canonical form (also the dedup/sort key).
std::string splitting_key(const Splitting& s);

}  // namespace dp6
