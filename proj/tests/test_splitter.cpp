#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dp6/splitter.hpp"

using namespace dp6;

namespace {

TangencyVector e(int j, int m = 1) { return TangencyVector::unit(j, m); }
const DivisorClass D1{3, {1, 1, 1, 1, 0, 0}};  // cubics missing points 5 and 6

// Independent re-enumeration: build the full candidate-part pool from sound
// bounds, assemble multisets with repetition, and apply every constraint at
// the leaves.  Deliberately dumb; shares no search logic with the library.
std::set<std::string> brute_force_keys(const Quadruple& query, int offset = -1) {
    std::set<std::string> found;
    const DivisorClass& D = query.D;
    const int kmax = static_cast<int>(std::min<long>(D.d - 2, (e_degree(D) + 1) / 2));

    for (int k = 0; k <= kmax; ++k) {
        DivisorClass Dp = D - fixed_conic() - line_pencil(k);
        if (Dp.d < 0 || Dp.e[5] < 0) continue;  // parts have d >= 0 and e6-coeff >= 0
        if (Dp.is_zero()) {
            // Whole curve into the conic plus pencil lines: admissible iff no
            // moving contact survives and the genus ledger closes with m = 0.
            if (query.beta.empty() && query.g == 1 + offset)
                found.insert(splitting_key({k, {}}));
            continue;
        }
        long budget = e_degree(Dp);
        if (budget < 1) continue;
        REQUIRE(budget <= 6);  // keep the dumb search tractable; choose queries accordingly

        struct Cand {
            Part part;
            long de;  // degree against the conic, for the budget prune
        };
        std::vector<Cand> pool;

        // Exceptional covers of any multiplicity (the genus cap rejects s >= 2
        // at the leaf; listing them proves that rejection).
        for (int j = 1; j <= 5; ++j)
            for (int s = 1; s <= budget; ++s)
                pool.push_back({{{s * exceptional(j), 0, {}, e(s)}, e(s)}, s});
        // Pencil-cover families with their admissible gluings.
        for (int s = 1; s <= Dp.e[5]; ++s) {
            pool.push_back({{{line_pencil(s), 0, e(s), e(s)}, e(s)}, 2L * s});
            pool.push_back({{{line_pencil(s), 0, {}, e(s, 2)}, e(s)}, 2L * s});
            pool.push_back({{{line_pencil(s), 0, {}, e(s, 2)}, e(s, 2)}, 2L * s});
        }
        // Curve parts: box coordinates, any genus up to the arithmetic bound,
        // any admissible tangency data.
        for (int dc = 1; dc <= Dp.d; ++dc) {
            std::array<int, 6> c{};
            std::function<void(int)> coords = [&](int i) {
                if (i == 6) {
                    DivisorClass C{dc, c};
                    if (pencil_multiple(C)) return;
                    long de = e_degree(C);
                    if (de < 1) return;
                    long gmax = arith_genus(C);
                    for (long g = 0; g <= gmax; ++g)
                        for (const auto& a : sub_vectors(query.alpha)) {
                            long wb = de - weight(a);
                            if (wb < 1) continue;
                            for (const auto& b : partitions_with_weight(wb))
                                for (const auto& gm : sub_vectors(b, 1)) {
                                    if (!leq(b - gm, query.beta)) continue;
                                    Quadruple pq{C, g, a, b};
                                    if (!admissible_summand(pq)) continue;
                                    pool.push_back({{pq, gm}, de});
                                }
                        }
                    return;
                }
                for (int v = 0; v <= dc; ++v) {
                    c[static_cast<size_t>(i)] = v;
                    coords(i + 1);
                }
            };
            coords(0);
        }

        std::vector<Part> cur;
        std::function<void(size_t, DivisorClass, long)> rec = [&](size_t start, DivisorClass sum,
                                                                  long de_used) {
            if (!cur.empty()) {
                DivisorClass rem = Dp - sum;
                // Sound prunes: every part has d >= 0, e6-coeff >= 0, conic
                // degree >= 1; positive coordinates need curve degree; negative
                // coordinates need cover budget.
                if (rem.d < 0 || rem.e[5] < 0 || rem.e[5] > rem.d) return;
                long cover_need = 0;
                for (int j = 0; j < 5; ++j) {
                    if (rem.e[j] > rem.d) return;
                    if (rem.e[j] < 0) cover_need += -rem.e[j];
                }
                if (cover_need > budget - de_used) return;

                if (sum == Dp) {
                    // Leaf: tangency, genus, and multiplicity constraints.
                    TangencyVector delta, alpha_sum;
                    long gsum = 0, gamma_norm = 0;
                    bool ok = true;
                    for (const auto& p : cur) {
                        delta += p.q.beta - p.gamma;
                        alpha_sum += p.q.alpha;
                        gsum += p.q.g;
                        gamma_norm += norm(p.gamma);
                        if (pencil_multiple(p.q.D)) {
                            if (p.q.g != 0) ok = false;  // families are rational
                        } else if (p.q.g < 0 || p.q.g > arith_genus(p.q.D)) {
                            ok = false;
                        }
                    }
                    long m = static_cast<long>(cur.size());
                    ok = ok && delta == query.beta && leq(alpha_sum, query.alpha) &&
                         gsum == query.g - gamma_norm + m - 1 - offset;
                    if (ok) {
                        // Rigid parts with no fixed tangencies occur at most
                        // once; compare raw data (no coordinate sorting).
                        std::map<std::string, int> rigid;
                        for (const auto& p : cur) {
                            if (r_dim(p.q) != 0 || !p.q.alpha.empty()) continue;
                            std::string rk = format_class(p.q.D) + "|" + std::to_string(p.q.g) +
                                             "|" + format_tangency(p.q.alpha) + "|" +
                                             format_tangency(p.q.beta);
                            if (++rigid[rk] > 1) ok = false;
                        }
                    }
                    if (ok) {
                        Splitting s{k, cur};
                        std::sort(s.parts.begin(), s.parts.end());
                        found.insert(splitting_key(s));
                    }
                    // fall through: a larger multiset may also hit Dp again
                }
            }
            for (size_t i = start; i < pool.size(); ++i) {
                if (de_used + pool[i].de > budget) continue;
                cur.push_back(pool[i].part);
                rec(i, sum + pool[i].part.q.D, de_used + pool[i].de);
                cur.pop_back();
            }
        };
        rec(0, DivisorClass{0, {0, 0, 0, 0, 0, 0}}, 0);
    }
    return found;
}

std::set<std::string> library_keys(const Quadruple& q, int offset = -1) {
    std::set<std::string> out;
    for (const auto& s : enumerate_splittings(q, offset)) out.insert(splitting_key(s));
    return out;
}

}  // namespace

TEST_SUITE("splitter") {

TEST_CASE("no configurations when the conic cannot break off") {
    CHECK(enumerate_splittings({line(), 0, {}, e(1, 2)}).empty());
    CHECK(enumerate_splittings({2 * exceptional(1), 1, {}, e(2)}).empty());
}

TEST_CASE("the planar-cubic worked example has exactly six configurations") {
    Quadruple q{D1, 0, e(1, 2), {}};
    auto ss = enumerate_splittings(q);
    REQUIRE(ss.size() == 6);

    int cover_plus_tangent_line = 0, cover_plus_fixed_line = 0, two_covers_plus_line = 0;
    for (const auto& s : ss) {
        CHECK(s.k == 0);
        for (const auto& p : s.parts) CHECK(norm(p.gamma) == 1);
        CHECK(std::is_sorted(s.parts.begin(), s.parts.end()));

        if (s.parts.size() == 2) {
            CHECK(s.parts[0].q == Quadruple{exceptional(5), 0, {}, e(1)});
            const Quadruple& c = s.parts[1].q;
            if (c == Quadruple{line(), 0, e(1), e(1)}) ++cover_plus_fixed_line;
            if (c == Quadruple{line(), 0, {}, e(2)}) ++cover_plus_tangent_line;
        } else if (s.parts.size() == 3) {
            ++two_covers_plus_line;
        }
    }
    CHECK(cover_plus_fixed_line == 1);
    CHECK(cover_plus_tangent_line == 1);
    CHECK(two_covers_plus_line == 4);  // E_j + E_5 + line missing j and 5, j = 1..4
}

TEST_CASE("whole-curve degeneration into the conic plus pencil lines") {
    // D = conic + one pencil line; with no moving contacts the k=1 summand
    // leaves nothing behind, so the empty configuration must appear.
    Quadruple q{DivisorClass{3, {1, 1, 1, 1, 1, 1}}, 0, e(1), {}};
    auto ss = enumerate_splittings(q);
    REQUIRE(ss.size() == 7);

    int empty_found = 0, family_found = 0, cover_line_pairs = 0;
    for (const auto& s : ss) {
        if (s.parts.empty()) {
            ++empty_found;
            CHECK(s.k == 1);
            CHECK(splitting_key(s) == "k=1");
            CHECK(splitting_multiplicity(s) == 1);
        } else if (s.parts.size() == 1) {
            ++family_found;
            CHECK(s.parts[0].q == Quadruple{line_pencil(1), 0, e(1), e(1)});
        } else {
            REQUIRE(s.parts.size() == 2);
            ++cover_line_pairs;
        }
    }
    CHECK(empty_found == 1);
    CHECK(family_found == 1);
    CHECK(cover_line_pairs == 5);

    // A surviving moving contact forbids the empty configuration.
    for (const auto& s : enumerate_splittings({q.D, 0, {}, e(1)}))
        CHECK(!s.parts.empty());
}

TEST_CASE("emitted configurations satisfy the whole constraint ledger") {
    for (const Quadruple& q :
         {Quadruple{DivisorClass{3, {0, 0, 0, 0, 0, 1}}, 0, {}, e(1, 6)},
          Quadruple{DivisorClass{3, {1, 1, 0, 0, 0, 0}}, 1, e(1, 4), {}},
          Quadruple{DivisorClass{2, {0, 0, 0, 0, 0, 0}}, 0, e(1, 3), e(1)}}) {
        auto ss = enumerate_splittings(q);
        std::string prev;
        for (const auto& s : ss) {
            std::string sk = splitting_key(s);
            CHECK(prev < sk);  // strictly increasing, hence duplicate-free
            prev = sk;

            CHECK(s.k >= 0);
            CHECK(s.k <= std::min<long>(q.D.d - 2, (e_degree(q.D) + 1) / 2));

            DivisorClass target = q.D - fixed_conic() - line_pencil(s.k);
            if (s.parts.empty()) {
                // m = 0: only when the class is exactly conic plus lines.
                CHECK(target.is_zero());
                CHECK(q.beta.empty());
                continue;
            }
            DivisorClass sum{0, {0, 0, 0, 0, 0, 0}};
            TangencyVector beta_back, alpha_sum;
            long gsum = 0, gamma_norm = 0, nsum = 0;
            for (const auto& p : s.parts) {
                CHECK(admissible_summand(p.q));
                CHECK(norm(p.gamma) >= 1);
                CHECK(leq(p.gamma, p.q.beta));
                long ni = r_dim(p.q);
                CHECK(ni >= 0);
                nsum += ni;
                sum += p.q.D;
                beta_back += p.q.beta - p.gamma;
                alpha_sum += p.q.alpha;
                gsum += p.q.g;
                gamma_norm += norm(p.gamma);
            }
            CHECK(sum == target);
            CHECK(beta_back == q.beta);
            CHECK(leq(alpha_sum, q.alpha));
            CHECK(gsum == q.g - gamma_norm + static_cast<long>(s.parts.size()));
            CHECK(nsum == r_dim(q) - 1);
        }
    }
}

TEST_CASE("printed genus offset shifts the ledger consistently") {
    Quadruple q{DivisorClass{3, {0, 0, 0, 0, 0, 1}}, 1, {}, e(1, 6)};
    for (const auto& s : enumerate_splittings(q, +1)) {
        long gsum = 0, gamma_norm = 0, nsum = 0;
        for (const auto& p : s.parts) {
            gsum += p.q.g;
            gamma_norm += norm(p.gamma);
            nsum += r_dim(p.q);
        }
        CHECK(gsum == q.g - gamma_norm + static_cast<long>(s.parts.size()) - 2);
        CHECK(nsum == r_dim(q) - 3);
    }
}

TEST_CASE("ordering-count helper") {
    Part a{{exceptional(1), 0, {}, e(1)}, e(1)};
    Part b{{exceptional(2), 0, {}, e(1)}, e(1)};
    Part c{{line(), 0, {}, e(2)}, e(2)};
    CHECK(splitting_multiplicity({0, {a, b, c}}) == 6);
    CHECK(splitting_multiplicity({0, {a, c, c}}) == 3);
    CHECK(splitting_multiplicity({0, {c, c, c}}) == 1);
    CHECK(splitting_multiplicity({0, {a}}) == 1);
}

TEST_CASE("index-permutation symmetry of the configuration set") {
    auto fingerprint = [](const Quadruple& q) {
        std::multiset<std::string> out;
        for (const auto& s : enumerate_splittings(q)) {
            std::multiset<std::string> parts;
            for (const auto& p : s.parts)
                parts.insert(key(p.q) + "#" + format_tangency(p.gamma));
            std::string sk = "k=" + std::to_string(s.k);
            for (const auto& x : parts) sk += ";" + x;
            out.insert(sk);
        }
        return out;
    };
    Quadruple q{D1, 0, e(1, 2), {}};
    Quadruple p{DivisorClass{3, {0, 1, 1, 1, 1, 0}}, 0, e(1, 2), {}};
    CHECK(fingerprint(q) == fingerprint(p));

    Quadruple q2{DivisorClass{2, {1, 0, 0, 0, 0, 1}}, 0, e(1), e(1)};
    Quadruple p2{DivisorClass{2, {0, 0, 0, 1, 0, 1}}, 0, e(1), e(1)};
    CHECK(fingerprint(q2) == fingerprint(p2));
}

TEST_CASE("brute-force completeness oracle at small scale") {
    std::vector<DivisorClass> classes{
        {2, {0, 0, 0, 0, 0, 0}}, {2, {1, 0, 0, 0, 0, 0}}, {2, {1, 1, 0, 0, 0, 0}},
        {2, {1, 1, 0, 0, 0, 1}}, {2, {0, 0, 0, 0, 0, 1}}, {3, {1, 1, 0, 0, 0, 0}},
        {3, {1, 1, 1, 0, 0, 0}}, {3, {1, 1, 1, 0, 0, 1}}, D1,
        {3, {1, 1, 1, 1, 1, 0}}, {3, {1, 1, 1, 1, 1, 1}},
    };
    long queries = 0, nonempty = 0, configs = 0;
    for (const auto& D : classes) {
        long de = e_degree(D);
        REQUIRE(de >= 0);
        long gmax = std::max<long>(arith_genus(D), 0);
        for (long g = 0; g <= std::min<long>(gmax, 1); ++g) {
            for (long wb = 0; wb <= de; ++wb) {
                for (const auto& beta : partitions_with_weight(wb)) {
                    for (const auto& alpha : partitions_with_weight(de - wb)) {
                        Quadruple q{D, g, alpha, beta};
                        if (r_dim(q) <= 0 || special_family_order(q)) continue;
                        auto lib = library_keys(q);
                        auto ref = brute_force_keys(q);
                        if (lib != ref) {
                            CAPTURE(key(q));
                            REQUIRE(lib == ref);
                        }
                        ++queries;
                        if (!lib.empty()) ++nonempty;
                        configs += static_cast<long>(lib.size());
                    }
                }
            }
        }
    }
    // the sweep must actually exercise the enumerator
    CHECK(queries > 100);
    CHECK(nonempty > 20);
    CHECK(configs > nonempty);
    MESSAGE("oracle sweep: ", queries, " queries, ", nonempty, " with configurations, ",
            configs, " configurations in total");
}

}  // TEST_SUITE
