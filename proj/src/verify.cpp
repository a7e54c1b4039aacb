#include "dp6/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp6/engine.hpp"
#include "dp6/genus_zero.hpp"
#include "dp6/oracle.hpp"
#include "dp6/quadruple.hpp"

namespace dp6::verify {

namespace {

using Clock = std::chrono::steady_clock;

// Structural (internal-check) violations observed anywhere in the suite;
// criterion 7 requires this to stay at zero across criteria 1-6.
std::atomic<int> g_check_violations{0};

struct Outcome {
    bool pass = true;
    std::string detail;
};

template <typename Body>
CriterionResult run_criterion(int id, std::string name, Body&& body) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    auto t0 = Clock::now();
    try {
        Outcome o = body();
        r.pass = o.pass;
        r.detail = std::move(o.detail);
    } catch (const std::logic_error& e) {
        g_check_violations.fetch_add(1);
        r.pass = false;
        r.detail = std::string("internal check fired: ") + e.what();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
}

std::string join(const std::vector<Int>& v) {
    std::string out;
    for (const auto& x : v) {
        if (!out.empty()) out += ", ";
        out += x.str();
    }
    return out;
}

// ---------------------------------------------------------------- criterion 1
Outcome c1_genus_table(int threads) {
    const DivisorClass D{6, {2, 2, 2, 2, 2, 2}};
    const std::vector<Int> expect{3240, 1740, 369, 33, 1};

    EvalConfig cfg;
    cfg.threads = threads;
    MemoCache memo("general", -1);
    std::vector<Int> got;
    for (const auto& [g, v] : genus_table(D, cfg, memo)) {
        (void)g;
        got.push_back(v);
    }
    if (got != expect)
        return {false, "offset -1 table mismatch: got [" + join(got) + "], want [" +
                           join(expect) + "]"};

    EvalConfig printed = cfg;
    printed.genus_offset = +1;
    MemoCache memo_printed("general", +1);
    std::vector<Int> got_printed;
    for (const auto& [g, v] : genus_table(D, printed, memo_printed)) {
        (void)g;
        got_printed.push_back(v);
    }
    if (got_printed == expect)
        return {false,
                "printed (+1) genus offset reproduces the table as well; the offset "
                "decision would be unsupported"};

    return {true, "g=0..4 -> [" + join(got) + "]; printed +1 offset gives [" +
                      join(got_printed) + "] (differs, as required)"};
}

// ---------------------------------------------------------------- criterion 2
Outcome c2_closed_form() {
    EvalConfig cfg;
    MemoCache memo("general", -1);
    std::vector<Int> got, want;
    for (int n = 0; n <= 4; ++n) {
        DivisorClass D{n + 2, {n, 0, 0, 0, 0, 0}};
        Quadruple q{D, 0, {}, TangencyVector::unit(1, n + 4)};
        got.push_back(evaluate(q, cfg, memo));
        want.push_back(closed_form_blowup(n));
    }
    if (got != want)
        return {false, "got [" + join(got) + "], want [" + join(want) + "]"};
    return {true, "n=0..4 -> [" + join(got) + "] = 4^n C(n+2,2)"};
}

// ---------------------------------------------------------------- criterion 3
Outcome c3_presentation_invariance() {
    EvalConfig cfg;
    MemoCache memo("general", -1);
    std::vector<Int> got, want;
    for (int n = 0; n <= 3; ++n) {
        DivisorClass D{n + 2, {0, 0, 0, 0, 0, n}};
        Quadruple q{D, 0, {}, TangencyVector::unit(1, 2 * n + 4)};
        got.push_back(evaluate(q, cfg, memo));
        want.push_back(closed_form_blowup(n));
    }
    if (got != want)
        return {false, "-nE6 family got [" + join(got) + "], want [" + join(want) + "]"};
    return {true, "n=0..3 via -nE6 -> [" + join(got) + "], equal to the -nE1 family"};
}

// ---------------------------------------------------------------- criterion 4
Outcome c4_base_table(bool full) {
    const int smax = full ? 4 : 2;  // pattern parameter bound
    const int dmax = full ? 4 : 2;  // degree bound
    const int cmax = smax;          // coefficient box |d_i| <= cmax
    const long wmax = 2 * smax;     // largest tangency weight in the box

    EvalConfig cfg;
    MemoCache memo("general", -1);

    // Expected values for every initial-value pattern instance in the box,
    // keyed canonically.  emplace keeps the first value; a conflicting
    // duplicate would mean two patterns overlap, which we check.
    std::map<std::string, Int> table;
    auto add = [&](const Quadruple& q, const Int& v) -> const char* {
        auto [it, fresh] = table.emplace(key(q), v);
        if (!fresh && it->second != v) return "two patterns disagree on one quadruple";
        return nullptr;
    };

    for (int s = 1; s <= smax; ++s) {
        // One-dimensional family of pencil covers, two moving contacts.
        if (auto* e = add({line_pencil(s), 0, {}, TangencyVector::unit(s, 2)}, 1)) return {false, e};
        // Pencil cover with one maximal moving contact.
        if (auto* e = add({line_pencil(s), 0, {}, TangencyVector::unit(2 * s)}, 2)) return {false, e};
        // Pencil cover with one fixed and one moving contact.
        if (auto* e = add({line_pencil(s), 0, TangencyVector::unit(s), TangencyVector::unit(s)}, 1))
            return {false, e};
        for (int i = 1; i <= 5; ++i) {
            // s-fold exceptional cover.
            if (auto* e = add({s * exceptional(i), 0, {}, TangencyVector::unit(s)}, 1))
                return {false, e};
            // s-fold cover of the line through point i and point 6.
            DivisorClass Li{s, {0, 0, 0, 0, 0, s}};
            Li.e[i - 1] = s;
            if (auto* e = add({Li, 0, {}, TangencyVector::unit(s)}, 1)) return {false, e};
        }
    }
    // Fixed-point pattern: dL - d1 E1 - ... - d5 E5 - (d-1) E6, d_i in {0,1},
    // all tangency fixed (beta = 0), one instance per alpha shape.
    for (int d = 1; d <= dmax; ++d) {
        for (int mask = 0; mask < 32; ++mask) {
            int sum = 0;
            DivisorClass D{d, {0, 0, 0, 0, 0, d - 1}};
            for (int i = 0; i < 5; ++i)
                if ((mask >> i) & 1) {
                    D.e[i] = 1;
                    ++sum;
                }
            if (sum > 2 * d) continue;
            for (const auto& alpha : partitions_with_weight(2 * d - sum))
                if (auto* e = add({D, 0, alpha, {}}, 1)) return {false, e};
        }
    }

    long pattern_checked = 0;
    for (const auto& [k, v] : table) {
        auto q = parse_key(k);
        check(q.has_value(), "table keys must round-trip");
        Int got = evaluate(*q, cfg, memo);
        if (got != v)
            return {false, "pattern " + k + " -> " + got.str() + ", want " + v.str()};
        ++pattern_checked;
    }

    // Exhaustive r_dim = 0 sweep over the box: everything that is not a
    // pattern instance must evaluate to 0.
    long zero_checked = 0;
    for (int d = 0; d <= dmax; ++d) {
        for (int d6 = d - 1; d6 <= cmax; ++d6) {
            std::array<int, 5> c{};
            auto sweep = [&](auto&& self, int i, int sum) -> void {
                if (i == 5) {
                    long de = 2L * d - sum;
                    if (de < 0 || de > wmax) return;
                    DivisorClass D{d, {c[0], c[1], c[2], c[3], c[4], d6}};
                    for (long wb = 0; wb <= de; ++wb) {
                        auto alphas = partitions_with_weight(de - wb);
                        for (const auto& beta : partitions_with_weight(wb)) {
                            long g = d6 - d + 1 - norm(beta);
                            if (g < 0) continue;
                            for (const auto& alpha : alphas) {
                                Quadruple q{D, g, alpha, beta};
                                check(r_dim(q) == 0, "sweep must stay on r_dim = 0");
                                auto it = table.find(key(q));
                                Int want = it == table.end() ? Int(0) : it->second;
                                Int got = evaluate(q, cfg, memo);
                                if (got != want)
                                    throw std::runtime_error("box quadruple " + key(q) +
                                                             " -> " + got.str() + ", want " +
                                                             want.str());
                                ++zero_checked;
                            }
                        }
                    }
                    return;
                }
                for (int v = -cmax; v <= cmax; ++v) {
                    c[static_cast<size_t>(i)] = v;
                    self(self, i + 1, sum + v);
                }
            };
            sweep(sweep, 0, 0);
        }
    }

    // Negative genus is identically zero by definition.
    for (const Quadruple& q :
         {Quadruple{line(), -1, {}, TangencyVector::unit(1, 2)},
          Quadruple{2 * exceptional(1), -1, {}, TangencyVector::unit(2)},
          Quadruple{line_pencil(3), -2, {}, TangencyVector::unit(6)}}) {
        if (evaluate(q, cfg, memo) != 0) return {false, "negative genus must vanish: " + key(q)};
    }

    return {true, std::to_string(pattern_checked) + " pattern instances (s<=" +
                      std::to_string(smax) + ", d<=" + std::to_string(dmax) + ") and " +
                      std::to_string(zero_checked) + " r_dim=0 box quadruples checked"};
}

// ---------------------------------------------------------------- criterion 5
Outcome c5_cross_engine(bool full) {
    const int dmax = full ? 4 : 3;
    const int cmax = full ? 2 : 1;

    EvalConfig cfg;
    MemoCache mg("general", -1);
    MemoCache mz("genus0", -1);

    long queries = 0;
    Int nonzero = 0;
    for (int d = 0; d <= dmax; ++d) {
        std::array<int, 6> c{};
        auto sweep = [&](auto&& self, int i) -> void {
            if (i == 6) {
                DivisorClass D{d, {c[0], c[1], c[2], c[3], c[4], c[5]}};
                long de = e_degree(D);
                if (de < 0) return;
                for (long wb = 0; wb <= de; ++wb) {
                    auto alphas = partitions_with_weight(de - wb);
                    for (const auto& beta : partitions_with_weight(wb)) {
                        for (const auto& alpha : alphas) {
                            Int a = evaluate({D, 0, alpha, beta}, cfg, mg);
                            Int b = evaluate0(D, alpha, beta, mz);
                            if (a != b)
                                throw std::runtime_error(
                                    "engines disagree at " + key({D, 0, alpha, beta}) + ": " +
                                    a.str() + " vs " + b.str());
                            ++queries;
                            if (a != 0) ++nonzero;
                        }
                    }
                }
                return;
            }
            for (int v = -cmax; v <= cmax; ++v) {
                c[static_cast<size_t>(i)] = v;
                self(self, i + 1);
            }
        };
        sweep(sweep, 0);
    }
    return {true, std::to_string(queries) + " weight-valid queries (d<=" +
                      std::to_string(dmax) + ", |d_i|<=" + std::to_string(cmax) +
                      "), engines agree; " + nonzero.str() + " nonzero"};
}

// ---------------------------------------------------------------- criterion 6
Outcome c6_plane_oracle() {
    EvalConfig cfg;
    MemoCache memo("general", -1);
    std::vector<Int> got, want;
    for (int d = 1; d <= 4; ++d) {
        got.push_back(gw(DivisorClass{d, {0, 0, 0, 0, 0, 0}}, 0, cfg, memo));
        want.push_back(kontsevich(d));
    }
    if (got != want)
        return {false, "gw(dL,0) = [" + join(got) + "], recursion gives [" + join(want) + "]"};
    return {true, "d=1..4 -> [" + join(got) + "], matching the plane recursion"};
}

// ---------------------------------------------------------------- criterion 7
Outcome c7_structural() {
    int fired = g_check_violations.load();
    if (fired != 0)
        return {false, std::to_string(fired) + " internal-check violation(s) during criteria 1-6"};
    return {true,
            "all internal checks (dimension ledger, nonnegativity, integrality, "
            "termination measure) are compiled in and stayed silent across criteria 1-6"};
}

// ---------------------------------------------------------------- criterion 8
Outcome c8_lando() {
    for (int n = 0; n <= 50; ++n)
        if (!lando_identity(n)) return {false, "identity fails at n=" + std::to_string(n)};
    return {true, "n=0..50 all hold"};
}

// ---------------------------------------------------------------- criterion 9
Outcome c9_cache_roundtrip() {
    namespace fs = std::filesystem;
    const DivisorClass D{6, {2, 2, 2, 2, 2, 2}};
    const std::vector<Int> expect{3240, 1740, 369, 33, 1};

    EvalConfig cfg;
    MemoCache cold("general", -1);
    std::vector<Int> cold_vals;
    for (long g = 0; g <= 4; ++g) cold_vals.push_back(gw(D, g, cfg, cold));
    if (cold_vals != expect) return {false, "cold run mismatch: [" + join(cold_vals) + "]"};

    auto stamp = std::to_string(
        std::chrono::steady_clock::now().time_since_epoch().count());
    fs::path p1 = fs::temp_directory_path() / ("dp6_verify_" + stamp + "_a.cache");
    fs::path p2 = fs::temp_directory_path() / ("dp6_verify_" + stamp + "_b.cache");
    cold.save(p1);

    MemoCache warm("general", -1);
    warm.load(p1);
    warm.save(p2);

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    bool identical = slurp(p1) == slurp(p2);
    std::size_t records = warm.size();
    fs::remove(p1);
    fs::remove(p2);
    if (!identical) return {false, "save -> load -> save is not byte-identical"};

    std::vector<Int> warm_vals;
    for (long g = 0; g <= 4; ++g) warm_vals.push_back(gw(D, g, cfg, warm));
    if (warm_vals != expect) return {false, "warm rerun mismatch: [" + join(warm_vals) + "]"};
    if (warm.hits() == 0) return {false, "warm rerun never hit the loaded cache"};

    return {true, std::to_string(records) + " records round-tripped byte-identically; warm rerun reproduced the table with " +
                      std::to_string(warm.hits()) + " cache hits"};
}

// --------------------------------------------------------------- criterion 10
Outcome c10_symmetry(bool full) {
    const int samples = full ? 200 : 50;

    std::mt19937 rng(20260825u);
    auto uniform = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    EvalConfig cfg;
    cfg.canonicalize = false;
    MemoCache memo("general", -1);

    int done = 0;
    long nonzero = 0;
    long attempts = 0;
    while (done < samples) {
        if (++attempts > 200L * samples) return {false, "sampler starved"};

        int d = uniform(0, 3);
        DivisorClass D{d, {0, 0, 0, 0, 0, 0}};
        bool junk = uniform(0, 9) < 3;  // mix in off-box classes
        for (int i = 0; i < 6; ++i)
            D.e[i] = junk ? uniform(-2, 2) : uniform(0, std::min(d, 2));

        long de = e_degree(D);
        long gmax = arith_genus(D);
        if (de < 0 || de > 8 || gmax < 0) continue;
        long g = uniform(0, static_cast<int>(std::min<long>(gmax, 4)));

        TangencyVector alpha, beta;
        long rem = de;
        while (rem > 0) {
            int j = uniform(1, static_cast<int>(std::min<long>(rem, 4)));
            (uniform(0, 1) ? alpha : beta) += TangencyVector::unit(j);
            rem -= j;
        }

        Quadruple q{D, g, alpha, beta};
        Int v1 = evaluate(q, cfg, memo);

        Quadruple p = q;
        std::shuffle(p.D.e.begin(), p.D.e.begin() + 5, rng);
        Int v2 = evaluate(p, cfg, memo);

        if (v1 != v2)
            return {false, "permutation changed the value at " + key(q) + ": " + v1.str() +
                               " vs " + v2.str()};
        if (v1 != 0) ++nonzero;
        ++done;
    }
    return {true, std::to_string(samples) + " random quadruples (d<=3), raw keys, " +
                      std::to_string(nonzero) + " nonzero values, all permutation-invariant"};
}

}  // namespace

std::vector<CriterionResult> run_suite(
    Suite suite, int threads,
    const std::function<void(const CriterionResult&)>& on_result) {
    const bool full = suite == Suite::full;
    g_check_violations.store(0);

    std::vector<CriterionResult> out;
    auto push = [&](CriterionResult r) {
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    };

    push(run_criterion(1, "genus table for 6L-2(E1+...+E6) pins the genus offset",
                       [&] { return c1_genus_table(threads); }));
    push(run_criterion(2, "closed form 4^n C(n+2,2) via (n+2)L-nE1",
                       [] { return c2_closed_form(); }));
    push(run_criterion(3, "presentation invariance: (n+2)L-nE6 equals the -nE1 family",
                       [] { return c3_presentation_invariance(); }));
    push(run_criterion(4, "initial-value table and the r_dim=0 box",
                       [&] { return c4_base_table(full); }));
    push(run_criterion(5, "cross-engine agreement on the genus-0 grid",
                       [&] { return c5_cross_engine(full); }));
    push(run_criterion(6, "plane degrees match the Kontsevich recursion",
                       [] { return c6_plane_oracle(); }));
    push(run_criterion(7, "structural assertions armed and silent",
                       [] { return c7_structural(); }));
    push(run_criterion(8, "binomial identity for n=0..50", [] { return c8_lando(); }));
    push(run_criterion(9, "cache persistence round-trip and warm rerun",
                       [] { return c9_cache_roundtrip(); }));
    push(run_criterion(10, "index-permutation symmetry without canonicalization",
                        [&] { return c10_symmetry(full); }));
    return out;
}

}  // namespace dp6::verify
