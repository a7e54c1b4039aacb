#include "dp6/splitter.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace dp6 {

namespace {

// Raw serialization: parts are concrete summands, so E1..E5 must NOT be
// identified here (distinct multisets may agree after canonicalization).
std::string raw_key(const Quadruple& q) {
    return format_class(q.D) + "|g=" + std::to_string(q.g) + "|a=" + format_tangency(q.alpha) +
           "|b=" + format_tangency(q.beta);
}

// A class-level building block: pencil multiples carry family data fixed by
// the class, curve atoms carry free data.
struct Slot {
    DivisorClass C;
    int pencil_s = 0;  // s >= 1 when C == s(L-E6)
};

struct Enumeration {
    const Quadruple& query;
    int genus_offset;
    long n;  // r_dim of the query
    std::map<std::string, Splitting> found;

    void emit(int k, std::vector<Part> parts) {
        std::sort(parts.begin(), parts.end());

        // The same rigid unconditioned component cannot occur twice in one
        // degeneration (zero-dimensional, no fixed contacts: it is one
        // concrete curve).
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i].q == parts[i + 1].q && parts[i].q.alpha.empty() && r_dim(parts[i].q) == 0)
                return;

        long nsum = 0;
        for (const auto& p : parts) {
            long ni = r_dim(p.q);
            check(ni >= 0, "splitting part with negative dimension");
            nsum += ni;
        }
        check(nsum == n - 2 - genus_offset, "splitting dimension ledger");

        Splitting s{k, std::move(parts)};
        std::string key_ = splitting_key(s);
        found.emplace(std::move(key_), std::move(s));
    }
};

// Fill the free slots with tangency data (respecting the alpha allowance and
// the exact beta target), then distribute the gluing genus.
struct DataFiller {
    Enumeration& en;
    int k;
    const std::vector<Slot>& slots;  // atom slots only; covers pre-seeded in `parts`
    std::vector<Part> parts;
    long gamma_norm_sum = 0;

    void run(size_t i, const TangencyVector& alpha_rem, const TangencyVector& beta_rem) {
        if (i == slots.size()) {
            if (beta_rem.empty()) finish_genus();
            return;
        }
        const Slot& s = slots[i];
        if (s.pencil_s > 0) {
            int o = s.pencil_s;
            TangencyVector es = TangencyVector::unit(o);
            // (s(L-E6),0,e_s,e_s): one contact fixed, one moving.
            if (leq(es, alpha_rem)) {
                push({{s.C, 0, es, es}, es});
                run(i + 1, alpha_rem - es, beta_rem);
                pop();
            }
            // (s(L-E6),0,0,2e_s) glued along one contact, the other
            // surviving into the query's beta...
            if (leq(es, beta_rem)) {
                push({{s.C, 0, {}, TangencyVector::unit(o, 2)}, es});
                run(i + 1, alpha_rem, beta_rem - es);
                pop();
            }
            // ...or glued along both contacts (costs one genus).
            push({{s.C, 0, {}, TangencyVector::unit(o, 2)}, TangencyVector::unit(o, 2)});
            run(i + 1, alpha_rem, beta_rem);
            pop();
            return;
        }
        long edeg = e_degree(s.C);
        for (const auto& a : sub_vectors(alpha_rem)) {
            long ia = weight(a);
            if (ia > edeg - 1) continue;
            for (const auto& d : sub_vectors(beta_rem)) {
                long w = edeg - ia - weight(d);
                if (w < 1) continue;
                for (const auto& gm : partitions_with_weight(w)) {
                    push({{s.C, 0, a, d + gm}, gm});
                    run(i + 1, alpha_rem - a, beta_rem - d);
                    pop();
                }
            }
        }
    }

    void push(Part p) {
        gamma_norm_sum += norm(p.gamma);
        parts.push_back(std::move(p));
    }
    void pop() {
        gamma_norm_sum -= norm(parts.back().gamma);
        parts.pop_back();
    }

    // sum(g_i) = g - sum||gamma|| + m - 1 - offset; each curve slot is capped
    // by its arithmetic genus, covers are rigid rational curves, and the
    // pencil families carry genus 0 by construction.
    void finish_genus() {
        long m = static_cast<long>(parts.size());
        long target = en.query.g - gamma_norm_sum + m - 1 - en.genus_offset;
        if (target < 0) return;

        std::vector<size_t> free_slots;
        std::vector<long> caps;
        long cap_total = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            const Quadruple& q = parts[i].q;
            if (pencil_multiple(q.D)) continue;
            long cap = arith_genus(q.D);
            check(cap >= 0, "curve part with negative genus cap survived pruning");
            if (cap == 0) continue;
            free_slots.push_back(i);
            caps.push_back(cap);
            cap_total += cap;
        }
        if (target > cap_total) return;

        std::vector<long> assign(free_slots.size(), 0);
        auto rec = [&](auto&& self, size_t idx, long rem) -> void {
            if (idx == free_slots.size()) {
                if (rem != 0) return;
                std::vector<Part> out = parts;
                for (size_t t = 0; t < free_slots.size(); ++t)
                    out[free_slots[t]].q.g = assign[t];
                en.emit(k, std::move(out));
                return;
            }
            long tail = 0;
            for (size_t t = idx + 1; t < caps.size(); ++t) tail += caps[t];
            for (long gi = std::max(0L, rem - tail); gi <= std::min(caps[idx], rem); ++gi) {
                assign[idx] = gi;
                self(self, idx + 1, rem - gi);
            }
        };
        rec(rec, 0, target);
    }
};

// Non-increasing multisets of box classes summing exactly to `target`:
// d >= 1, 0 <= e_i <= d, positive contact capacity, non-negative genus cap
// unless the class is a pencil multiple.
struct AtomEnumerator {
    std::vector<Slot> atoms;

    template <typename F>
    void run(const DivisorClass& target, const F& callback) {
        rec(target, std::nullopt, callback);
    }

private:
    static bool infeasible(const DivisorClass& rem) {
        if (rem.d < 1) return true;
        for (int i = 0; i < 6; ++i)
            if (rem.e[i] < 0 || rem.e[i] > rem.d) return true;
        return e_degree(rem) < 1;
    }

    template <typename F>
    void rec(const DivisorClass& rem, const std::optional<DivisorClass>& max_atom,
             const F& callback) {
        if (rem.is_zero()) {
            callback(atoms);
            return;
        }
        if (infeasible(rem)) return;

        int dmax = std::min(rem.d, max_atom ? max_atom->d : rem.d);
        for (int dc = dmax; dc >= 1; --dc) {
            DivisorClass A;
            A.d = dc;
            coord(rem, max_atom, A, 0, callback);
        }
    }

    template <typename F>
    void coord(const DivisorClass& rem, const std::optional<DivisorClass>& max_atom,
               DivisorClass& A, int i, const F& callback) {
        if (i == 6) {
            if (e_degree(A) < 1) return;
            if (max_atom && *max_atom < A) return;
            int ps = pencil_multiple(A);
            if (ps == 0 && arith_genus(A) < 0) return;  // no reduced irreducible member
            atoms.push_back({A, ps});
            rec(rem - A, A, callback);
            atoms.pop_back();
            return;
        }
        for (int v = std::min(A.d, rem.e[i]); v >= 0; --v) {
            A.e[i] = v;
            coord(rem, max_atom, A, i + 1, callback);
        }
        A.e[i] = 0;
    }
};

}  // namespace

std::vector<Splitting> enumerate_splittings(const Quadruple& query, int genus_offset) {
    check(genus_offset == -1 || genus_offset == 1, "genus offset must be -1 or +1");
    check(r_dim(query) > 0, "splitter requires a positive-dimensional query");
    check(special_family_order(query) == 0, "splitter must not see the special family");

    Enumeration en{query, genus_offset, r_dim(query), {}};

    const DivisorClass& D = query.D;
    long DE = e_degree(D);
    long kmax = std::min<long>(D.d - 2, (DE + 1) / 2);
    for (int k = 0; k <= kmax; ++k) {
        DivisorClass Dp = D - fixed_conic() - line_pencil(k);
        if (Dp.d < 0 || Dp.e[5] < 0) continue;  // every part has d >= 0 and e6 >= 0
        long budget = e_degree(Dp);              // total contact capacity of the parts
        // Dp == 0 admits exactly one candidate, the empty multiset: the whole
        // curve degenerates into the conic plus the k pencil lines.  The data
        // filler then requires beta to be exhausted and the genus ledger to
        // close with zero parts.
        if (budget < 1 && !Dp.is_zero()) continue;

        // Exceptional covers, at most one per index: a cover is forced where
        // D' has e_j = -1 and impossible below that.
        bool feasible = true;
        int forced = 0;
        for (int j = 0; j < 5; ++j) {
            if (Dp.e[j] < -1) {
                feasible = false;
                break;
            }
            if (Dp.e[j] == -1) forced |= 1 << j;
        }
        if (!feasible) continue;

        for (int mask = 0; mask < 32; ++mask) {
            if ((mask & forced) != forced) continue;
            int csum = 0;
            for (int j = 0; j < 5; ++j) csum += (mask >> j) & 1;
            if (csum > budget) continue;

            DivisorClass target = Dp;
            std::vector<Part> cover_parts;
            TangencyVector e1 = TangencyVector::unit(1);
            for (int j = 0; j < 5; ++j) {
                if (!((mask >> j) & 1)) continue;
                target.e[j] += 1;  // the cover absorbs one negative unit
                cover_parts.push_back({{exceptional(j + 1), 0, {}, e1}, e1});
            }

            AtomEnumerator atoms;
            atoms.run(target, [&](const std::vector<Slot>& found_atoms) {
                DataFiller fill{en, k, found_atoms, cover_parts,
                                static_cast<long>(cover_parts.size())};
                fill.run(0, query.alpha, query.beta);
            });
        }
    }

    std::vector<Splitting> out;
    out.reserve(en.found.size());
    for (auto& [key_, sp] : en.found) out.push_back(std::move(sp));
    return out;
}

Int splitting_multiplicity(const Splitting& s) {
    Int orderings = factorial(static_cast<long>(s.parts.size()));
    size_t i = 0;
    while (i < s.parts.size()) {
        size_t j = i;
        while (j < s.parts.size() && s.parts[j] == s.parts[i]) ++j;
        orderings =
            exact_div(orderings, factorial(static_cast<long>(j - i)), "splitting multiplicity");
        i = j;
    }
    return orderings;
}

std::string splitting_key(const Splitting& s) {
    std::string out = "k=" + std::to_string(s.k);
    for (const auto& p : s.parts) {
        out += ';';
        out += raw_key(p.q);
        out += '#';
        out += format_tangency(p.gamma);
    }
    return out;
}

}  // namespace dp6
