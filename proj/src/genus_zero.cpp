#include "dp6/genus_zero.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp6/quadruple.hpp"

namespace dp6 {

namespace {

struct ZeroPart {
    DivisorClass C;
    TangencyVector alpha;
    TangencyVector beta;
    TangencyVector gamma;  // always a single entry e_w

    friend auto operator<=>(const ZeroPart&, const ZeroPart&) = default;
};

std::string zero_part_key(const ZeroPart& p) {
    return format_class(p.C) + "|a=" + format_tangency(p.alpha) + "|b=" + format_tangency(p.beta) +
           "#" + format_tangency(p.gamma);
}

struct ZeroEngine {
    MemoCache& memo;
    EvalStats* stats;

    Int eval(const DivisorClass& D, const TangencyVector& alpha, const TangencyVector& beta) {
        if (stats) stats->evaluations.fetch_add(1, std::memory_order_relaxed);
        check(weight(alpha) + weight(beta) == e_degree(D), "genus-0 internal weight ledger");

        Quadruple q{canonicalize(D), 0, alpha, beta};
        if (special_family_order(q)) return 1;
        long n = r_dim(q);
        if (n < 0) return 0;
        if (n == 0) {
            auto bv = base_value(q);
            check(bv.has_value(), "r_dim = 0 must be a base case");
            return *bv;
        }
        if (arith_genus(q.D) < 0) return 0;  // no reduced irreducible member

        std::string mk = key(q);
        if (auto hit = memo.get(mk)) return *hit;

        Int total = 0;
        for (const auto& [j, mult] : q.beta.entries()) {
            (void)mult;
            TangencyVector ej = TangencyVector::unit(j);
            total += j * eval(q.D, q.alpha + ej, q.beta - ej);
        }
        total += second_sum(q.D, q.alpha, q.beta, n);

        check(total >= 0, "invariant values are nonnegative");
        memo.put(mk, total);
        return total;
    }

    Int second_sum(const DivisorClass& D, const TangencyVector& alpha,
                   const TangencyVector& beta, long n) {
        Int total = 0;
        std::set<std::string> seen;

        long kmax_global = std::min<long>(D.d - 2, D.e[5]);
        if (kmax_global < 0) return 0;

        for (const auto& beta0 : sub_vectors(beta)) {
            for (const auto& alpha0 : sub_vectors(alpha)) {
                long base_t = weight(alpha0) + weight(beta0);
                for (long k = 0; base_t + k <= kmax_global; ++k) {
                    long t = base_t + k;
                    DivisorClass Dp = D - fixed_conic() - line_pencil(static_cast<int>(t));
                    if (e_degree(Dp) < 0) continue;
                    enumerate_configs(D, alpha, beta, n, static_cast<int>(k), alpha0, beta0, Dp,
                                      seen, total);
                }
            }
        }
        return total;
    }

    void enumerate_configs(const DivisorClass& D, const TangencyVector& alpha,
                           const TangencyVector& beta, long n, int k,
                           const TangencyVector& alpha0, const TangencyVector& beta0,
                           const DivisorClass& Dp, std::set<std::string>& seen, Int& total) {
        // Exceptional covers: at most one per index (enforced later by the
        // at-most-once rule on zero-dimensional triples, but pruned here).
        bool feasible = true;
        int forced = 0;
        for (int j = 0; j < 5; ++j) {
            if (Dp.e[j] < -1) {
                feasible = false;
                break;
            }
            if (Dp.e[j] == -1) forced |= 1 << j;
        }
        if (!feasible || Dp.e[5] < 0 || Dp.d < 0) return;

        long budget = e_degree(Dp);
        for (int mask = 0; mask < 32; ++mask) {
            if ((mask & forced) != forced) continue;
            int csum = 0;
            for (int j = 0; j < 5; ++j) csum += (mask >> j) & 1;
            if (csum > budget) continue;

            DivisorClass target = Dp;
            std::vector<ZeroPart> covers;
            for (int j = 0; j < 5; ++j) {
                if (!((mask >> j) & 1)) continue;
                target.e[j] += 1;
                TangencyVector e1 = TangencyVector::unit(1);
                covers.push_back({exceptional(j + 1), {}, e1, e1});
            }

            std::vector<DivisorClass> atoms;
            enumerate_atoms(target, std::nullopt, atoms, [&](const std::vector<DivisorClass>& cs) {
                fill_data(D, alpha, beta, n, k, alpha0, beta0, covers, cs, seen, total);
            });
        }
    }

    // Non-increasing multisets of curve classes summing to `target`:
    // d >= 1, box coordinates, d6 < d or at least not a pencil multiple
    // (pencil covers live in alpha0/beta0/k), nonnegative genus cap.
    template <typename F>
    void enumerate_atoms(const DivisorClass& rem, std::optional<DivisorClass> max_atom,
                         std::vector<DivisorClass>& atoms, const F& done) {
        if (rem.is_zero()) {
            done(atoms);
            return;
        }
        if (rem.d < 1) return;
        for (int i = 0; i < 6; ++i)
            if (rem.e[i] < 0 || rem.e[i] > rem.d) return;
        if (e_degree(rem) < 1) return;

        int dmax = std::min(rem.d, max_atom ? max_atom->d : rem.d);
        DivisorClass A;
        for (int dc = dmax; dc >= 1; --dc) {
            A.d = dc;
            atom_coord(rem, max_atom, A, 0, atoms, done);
        }
    }

    template <typename F>
    void atom_coord(const DivisorClass& rem, const std::optional<DivisorClass>& max_atom,
                    DivisorClass& A, int i, std::vector<DivisorClass>& atoms, const F& done) {
        if (i == 6) {
            if (e_degree(A) < 1) return;
            if (max_atom && *max_atom < A) return;
            if (pencil_multiple(A)) return;        // resummed, never a part
            if (arith_genus(A) < 0) return;        // no reduced irreducible member
            atoms.push_back(A);
            enumerate_atoms(rem - A, A, atoms, done);
            atoms.pop_back();
            return;
        }
        for (int v = std::min(A.d, rem.e[i]); v >= 0; --v) {
            A.e[i] = v;
            atom_coord(rem, max_atom, A, i + 1, atoms, done);
        }
        A.e[i] = 0;
    }

    void fill_data(const DivisorClass& D, const TangencyVector& alpha,
                   const TangencyVector& beta, long n, int k, const TangencyVector& alpha0,
                   const TangencyVector& beta0, const std::vector<ZeroPart>& covers,
                   const std::vector<DivisorClass>& atoms, std::set<std::string>& seen,
                   Int& total) {
        std::vector<ZeroPart> parts = covers;
        TangencyVector alpha_rem = alpha - alpha0;
        TangencyVector beta_rem = beta - beta0;

        auto rec = [&](auto&& self, size_t i, const TangencyVector& arem,
                       const TangencyVector& brem) -> void {
            if (i == atoms.size()) {
                if (brem.empty()) finish(D, alpha, n, k, alpha0, beta0, parts, seen, total);
                return;
            }
            long edeg = e_degree(atoms[i]);
            for (const auto& a : sub_vectors(arem)) {
                long ia = weight(a);
                if (ia > edeg - 1) continue;
                for (const auto& d : sub_vectors(brem)) {
                    long w = edeg - ia - weight(d);
                    if (w < 1) continue;
                    // Genus zero: exactly one gluing point per part.
                    TangencyVector gm = TangencyVector::unit(static_cast<int>(w));
                    parts.push_back({atoms[i], a, d + gm, gm});
                    self(self, i + 1, arem - a, brem - d);
                    parts.pop_back();
                }
            }
        };
        rec(rec, 0, alpha_rem, beta_rem);
    }

    void finish(const DivisorClass& D, const TangencyVector& alpha, long n, int k,
                const TangencyVector& alpha0, const TangencyVector& beta0,
                std::vector<ZeroPart> parts, std::set<std::string>& seen, Int& total) {
        std::sort(parts.begin(), parts.end());

        // At-most-once for zero-dimensional triples (D, beta): one concrete
        // rigid curve cannot occur twice.  The rule ignores alpha, so equal
        // triples need not be adjacent in the part ordering.
        {
            std::set<std::string> rigid;
            for (const auto& p : parts) {
                if (r_dim(p.C, 0, norm(p.beta)) != 0) continue;
                if (!rigid.insert(format_class(p.C) + "|" + format_tangency(p.beta)).second)
                    return;
            }
        }

        std::string cfg_key = "k=" + std::to_string(k) + "|a0=" + format_tangency(alpha0) +
                              "|b0=" + format_tangency(beta0);
        for (const auto& p : parts) {
            cfg_key += ';';
            cfg_key += zero_part_key(p);
        }
        if (!seen.insert(cfg_key).second) return;
        if (stats) stats->splittings.fetch_add(1, std::memory_order_relaxed);

        long nsum = 0;
        for (const auto& p : parts) {
            long ni = r_dim(p.C, 0, norm(p.beta));
            check(ni >= 0, "genus-0 part with negative dimension");
            nsum += ni;
        }
        check(nsum == n - 1 - norm(beta0), "genus-0 dimension ledger");

        // 2^||b0|| I^{b0} / b0!  * C(k+3,3) * multinom(alpha; a0, parts)
        // * (n-1)! / prod n_i!  * prod C(beta_i, gamma_i) I^{gamma_i} N_i
        // / repetition factorials.
        Rat coeff = Rat(int_pow(2, norm(beta0)) * weight_power(beta0), vec_factorial(beta0));
        coeff *= binomial(k + 3, 3);

        std::vector<TangencyVector> alpha_parts{alpha0};
        Int ni_fact = 1;
        for (const auto& p : parts) {
            alpha_parts.push_back(p.alpha);
            ni_fact *= factorial(r_dim(p.C, 0, norm(p.beta)));
        }
        coeff *= vec_multinom(alpha, alpha_parts);
        coeff *= Rat(factorial(n - 1), ni_fact);

        Int rep = 1;
        {
            size_t i = 0;
            while (i < parts.size()) {
                size_t j = i;
                while (j < parts.size() && parts[j] == parts[i]) ++j;
                rep *= factorial(static_cast<long>(j - i));
                i = j;
            }
        }
        coeff /= rep;

        Rat term = coeff;
        for (const auto& p : parts) {
            Int value = eval(p.C, p.alpha, p.beta);
            if (value == 0) return;
            term *= value * vec_binom(p.beta, p.gamma) * weight_power(p.gamma);
        }

        check(boost::multiprecision::denominator(term) == 1,
              "genus-0 terms must be integers");
        Int iv = boost::multiprecision::numerator(term);
        check(iv >= 0, "genus-0 terms are nonnegative");
        total += iv;
    }
};

}  // namespace

Int evaluate0(const DivisorClass& D, const TangencyVector& alpha, const TangencyVector& beta,
              MemoCache& memo, EvalStats* stats) {
    long ws = weight(alpha) + weight(beta);
    long de = e_degree(D);
    if (ws != de)
        throw std::invalid_argument("weight-invalid query: I(alpha)+I(beta)=" +
                                    std::to_string(ws) + " != D.E=" + std::to_string(de));
    ZeroEngine en{memo, stats};
    return en.eval(D, alpha, beta);
}

}  // namespace dp6
