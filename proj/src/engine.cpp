#include "dp6/engine.hpp"

#include <future>
#include <optional>
#include <stdexcept>
#include <utility>

namespace dp6 {

namespace {

// Lexicographic termination measure: the first sum keeps D and shrinks
// ||beta||; every splitting part strictly drops the degree.
using Measure = std::pair<int, long>;

std::string memo_key(const Quadruple& q, const EvalConfig& cfg) {
    if (cfg.canonicalize) return key(q);
    Quadruple raw = q;  // serialize without sorting e1..e5
    return "raw:" + format_class(raw.D) + "|g=" + std::to_string(raw.g) +
           "|a=" + format_tangency(raw.alpha) + "|b=" + format_tangency(raw.beta);
}

struct Engine {
    const EvalConfig& cfg;
    MemoCache& memo;
    EvalStats* stats;

    Int eval(const Quadruple& q0, std::optional<Measure> parent, TraceResult* trace) {
        if (stats) stats->evaluations.fetch_add(1, std::memory_order_relaxed);

        if (q0.g < 0) {
            if (trace) trace->kind = TraceResult::Kind::zero_guard;
            return 0;
        }
        Quadruple q = cfg.canonicalize ? canonicalized(q0) : q0;
        if (trace) trace->query = q;

        if (special_family_order(q)) {
            if (trace) trace->kind = TraceResult::Kind::special_family;
            return 1;
        }
        long n = r_dim(q);
        if (n < 0) {
            if (trace) trace->kind = TraceResult::Kind::zero_guard;
            return 0;
        }
        if (n == 0) {
            auto bv = base_value(q);
            check(bv.has_value(), "r_dim = 0 must be a base case");
            if (trace) trace->kind = TraceResult::Kind::base;
            return *bv;
        }
        if (q.g > arith_genus(q.D)) {
            if (trace) trace->kind = TraceResult::Kind::zero_guard;
            return 0;
        }

        Measure measure{q.D.d, norm(q.beta)};
        check(!parent || measure < *parent, "termination measure must strictly decrease");

        std::string mk = memo_key(q, cfg);
        if (cfg.use_memo && !trace) {
            if (auto hit = memo.get(mk)) return *hit;
        }
        if (trace) trace->kind = TraceResult::Kind::recursion;

        Int total = 0;

        // First sum: move one moving contact of order j to a fixed point.
        for (const auto& [j, mult] : q.beta.entries()) {
            (void)mult;
            Quadruple child = q;
            child.alpha += TangencyVector::unit(j);
            child.beta -= TangencyVector::unit(j);
            Int cv = eval(child, measure, nullptr);
            total += j * cv;
            if (trace) trace->first_sum.push_back({j, child, cv, j * cv});
        }

        // Second sum: degenerations that split off the fixed conic.
        auto splittings = enumerate_splittings(q, cfg.genus_offset);
        if (stats) stats->splittings.fetch_add(splittings.size(), std::memory_order_relaxed);
        for (const auto& sp : splittings) total += splitting_term(q, n, sp, measure, trace);

        check(total >= 0, "invariant values are nonnegative");
        if (cfg.use_memo && !trace) memo.put(mk, total);
        return total;
    }

    Int splitting_term(const Quadruple& q, long n, const Splitting& sp,
                       const Measure& measure, TraceResult* trace) {
        std::vector<TangencyVector> alpha_parts;
        alpha_parts.reserve(sp.parts.size());
        Int ni_factorials = 1;
        for (const auto& p : sp.parts) {
            alpha_parts.push_back(p.q.alpha);
            ni_factorials *= factorial(r_dim(p.q));
        }
        Int alpha_multinomial = vec_multinom(q.alpha, alpha_parts);
        Int point_multinomial =
            exact_div(factorial(n - 1), ni_factorials, "point multinomial divisibility");
        Int k_factor = binomial(sp.k + 3, 3);

        // Identical (summand, gamma) pairs: the degeneration sum counts
        // unordered configurations, so the ordered-assignment coefficient
        // above is divided by the repetition factorials.
        Int rep_divisor = 1;
        {
            size_t i = 0;
            while (i < sp.parts.size()) {
                size_t j = i;
                while (j < sp.parts.size() && sp.parts[j] == sp.parts[i]) ++j;
                rep_divisor *= factorial(static_cast<long>(j - i));
                i = j;
            }
        }

        TraceSplitting rec;
        Int product = 1;
        for (const auto& p : sp.parts) {
            Int value = eval(p.q, measure, nullptr);
            bool counted = fixed_contact_family_order(p.q) == 0;
            Int bcg = 1, gw_ = 1;
            if (counted) {
                bcg = vec_binom(p.q.beta, p.gamma);
                gw_ = weight_power(p.gamma);
            }
            if (trace) rec.parts.push_back({p, r_dim(p.q), value, bcg, gw_, counted});
            product *= value * bcg * gw_;
            if (product == 0 && !trace) break;
        }

        Int term = exact_div(alpha_multinomial * point_multinomial * k_factor * product,
                             rep_divisor, "repetition quotient divisibility");
        check(term >= 0, "splitting terms are nonnegative");
        if (trace) {
            rec.k = sp.k;
            rec.alpha_multinomial = alpha_multinomial;
            rec.point_multinomial = point_multinomial;
            rec.k_factor = k_factor;
            rec.rep_divisor = rep_divisor;
            rec.term = term;
            trace->splittings.push_back(std::move(rec));
        }
        return term;
    }
};

}  // namespace

Int evaluate(const Quadruple& q, const EvalConfig& cfg, MemoCache& memo, EvalStats* stats) {
    Validation v = validate(q);
    if (!v.weight_ok)
        throw std::invalid_argument("weight-invalid query: I(alpha)+I(beta)=" +
                                    std::to_string(v.weight_sum) +
                                    " != D.E=" + std::to_string(v.degree));
    Engine en{cfg, memo, stats};
    return en.eval(q, std::nullopt, nullptr);
}

TraceResult evaluate_traced(const Quadruple& q, const EvalConfig& cfg, MemoCache& memo) {
    Validation v = validate(q);
    if (!v.weight_ok)
        throw std::invalid_argument("weight-invalid query: I(alpha)+I(beta)=" +
                                    std::to_string(v.weight_sum) +
                                    " != D.E=" + std::to_string(v.degree));
    Engine en{cfg, memo, nullptr};
    TraceResult tr;
    tr.query = q;
    tr.value = en.eval(q, std::nullopt, &tr);
    return tr;
}

Int gw(const DivisorClass& D, long g, const EvalConfig& cfg, MemoCache& memo, EvalStats* stats) {
    long de = e_degree(D);
    if (de < 0) throw std::invalid_argument("gw requires D.E >= 0, got " + std::to_string(de));
    Quadruple q{D, g, {}, TangencyVector::unit(1, static_cast<int>(de))};
    return evaluate(q, cfg, memo, stats);
}

std::vector<std::pair<long, Int>> genus_table(const DivisorClass& D, const EvalConfig& cfg,
                                              MemoCache& memo, EvalStats* stats) {
    std::vector<std::pair<long, Int>> rows;
    long gmax = arith_genus(D);
    if (gmax < 0) return rows;

    if (cfg.threads > 1) {
        for (long base = 0; base <= gmax; base += cfg.threads) {
            std::vector<std::future<Int>> futs;
            long wave_end = std::min(gmax, base + cfg.threads - 1);
            for (long g = base; g <= wave_end; ++g)
                futs.push_back(std::async(std::launch::async,
                                          [&, g] { return gw(D, g, cfg, memo, stats); }));
            for (long g = base; g <= wave_end; ++g)
                rows.emplace_back(g, futs[g - base].get());
        }
    } else {
        for (long g = 0; g <= gmax; ++g) rows.emplace_back(g, gw(D, g, cfg, memo, stats));
    }
    return rows;
}

}  // namespace dp6
