#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "dp6/cache.hpp"
#include "dp6/splitter.hpp"

namespace dp6 {

struct EvalConfig {
    int genus_offset = -1;     // gluing-genus bookkeeping; +1 replays the printed sign
    bool canonicalize = true;  // exploit the E1..E5 symmetry (memo keys follow suit)
    bool use_memo = true;
    int threads = 1;           // independent top-level queries (genus_table) only
};

struct EvalStats {
    std::atomic<std::uint64_t> evaluations{0};
    std::atomic<std::uint64_t> splittings{0};
};

// Audit records for a single top-level evaluation (children are summarized
// by their memoized values).
struct TraceFirstTerm {
    int order = 0;  // j: the contact order moved from beta to alpha
    Quadruple child;
    Int child_value;
    Int contribution;  // j * child_value
};
struct TracePart {
    Part part;
    long n_i = 0;
    Int value;
    Int beta_choose_gamma;  // 1 for parts outside S (the fixed-contact family)
    Int gamma_weight;       // I^gamma, 1 outside S
    bool counted = true;    // false for fixed-contact family parts
};
struct TraceSplitting {
    int k = 0;
    std::vector<TracePart> parts;
    Int alpha_multinomial;
    Int point_multinomial;
    Int k_factor;     // C(k+3,3)
    Int rep_divisor;  // product of repetition factorials
    Int term;
};
struct TraceResult {
    Quadruple query;
    enum class Kind { zero_guard, special_family, base, recursion } kind = Kind::recursion;
    Int value;
    std::vector<TraceFirstTerm> first_sum;
    std::vector<TraceSplitting> splittings;
};

// N(D, g, alpha, beta).  Throws std::invalid_argument when the query is not
// weight-valid (internal dead ends return 0 instead).
Int evaluate(const Quadruple& q, const EvalConfig& cfg, MemoCache& memo,
             EvalStats* stats = nullptr);

TraceResult evaluate_traced(const Quadruple& q, const EvalConfig& cfg, MemoCache& memo);

// The Gromov-Witten convention: no fixed contacts, all D.E moving contacts
// transversal.  Requires D.E >= 0.
Int gw(const DivisorClass& D, long g, const EvalConfig& cfg, MemoCache& memo,
       EvalStats* stats = nullptr);

// (g, gw(D,g)) for g = 0..arith_genus(D); empty when the genus range is.
std::vector<std::pair<long, Int>> genus_table(const DivisorClass& D, const EvalConfig& cfg,
                                              MemoCache& memo, EvalStats* stats = nullptr);

}  // namespace dp6
