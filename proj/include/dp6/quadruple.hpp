#pragma once

#include <compare>
#include <optional>
#include <string>

#include "dp6/picard.hpp"
#include "dp6/tangency.hpp"

namespace dp6 {

// The recursion state: class, genus, fixed tangencies (alpha), moving
// tangencies (beta), all relative to the fixed conic.
struct Quadruple {
    DivisorClass D;
    long g = 0;
    TangencyVector alpha;
    TangencyVector beta;

    friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

struct Validation {
    bool weight_ok = false;   // I(alpha) + I(beta) == D.E
    bool genus_ok = false;    // 0 <= g <= arith_genus(D)
    long weight_sum = 0;
    long degree = 0;          // D.E
    long genus_max = 0;       // arith_genus(D)
};

Validation validate(const Quadruple& q);

inline Quadruple canonicalized(const Quadruple& q) {
    return {canonicalize(q.D), q.g, q.alpha, q.beta};
}

// "<class>|g=<g>|a=<alpha>|b=<beta>" over the canonical form.
std::string key(const Quadruple& q);
std::optional<Quadruple> parse_key(std::string_view s);

inline long r_dim(const Quadruple& q) { return r_dim(q.D, q.g, norm(q.beta)); }

// s >= 1 when q = (s(L-E6), 0, 0, 2e_s): the one-dimensional family of
// s-fold line-pencil covers with two moving contact points; else 0.
int special_family_order(const Quadruple& q);
// s >= 1 when q = (s(L-E6), 0, e_s, e_s) (one fixed, one moving contact).
int fixed_contact_family_order(const Quadruple& q);

// The initial-value table.  Returns a value when q is the special R=1 family
// or has r_dim == 0 (0 when no pattern matches, and always 0 for g < 0);
// nullopt when q is not a base case.
std::optional<Int> base_value(const Quadruple& q);

bool admissible_summand(const Quadruple& q);

}  // namespace dp6
