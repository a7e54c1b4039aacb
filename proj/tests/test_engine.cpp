#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "dp6/engine.hpp"

using namespace dp6;

namespace {

TangencyVector e(int j, int m = 1) { return TangencyVector::unit(j, m); }
const DivisorClass D1{3, {1, 1, 1, 1, 0, 0}};  // cubics missing points 5 and 6

Int run(const Quadruple& q, EvalConfig cfg = {}) {
    MemoCache memo("general", cfg.genus_offset);
    return evaluate(q, cfg, memo);
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("line-level values") {
    CHECK(run({line(), 0, {}, e(1, 2)}) == 1);
    CHECK(run({line(), 0, e(1), e(1)}) == 1);
    CHECK(run({line(), 0, e(1, 2), {}}) == 1);
    CHECK(run({line(), 0, {}, e(2)}) == 2);
    CHECK(run({line(), 0, e(2), {}}) == 1);
    CHECK(run({line() - exceptional(1), 0, {}, e(1)}) == 1);
    CHECK(run({line() - exceptional(1), 0, e(1), {}}) == 1);
}

TEST_CASE("planar-cubic worked chain") {
    CHECK(run({D1, 0, e(1, 2), {}}) == 10);
    CHECK(run({D1, 0, e(1), e(1)}) == 12);
    CHECK(run({D1, 0, {}, e(1, 2)}) == 12);
}

TEST_CASE("top-level counts for small classes") {
    EvalConfig cfg;
    MemoCache memo("general", cfg.genus_offset);
    CHECK(gw(line(), 0, cfg, memo) == 1);
    CHECK(gw(DivisorClass{2, {0, 0, 0, 0, 0, 0}}, 0, cfg, memo) == 1);
    CHECK(gw(DivisorClass{1, {1, 1, 0, 0, 0, 0}}, 0, cfg, memo) == 1);
    CHECK(gw(DivisorClass{3, {0, 0, 0, 0, 0, 0}}, 0, cfg, memo) == 12);
    CHECK(gw(DivisorClass{3, {0, 0, 0, 0, 0, 1}}, 0, cfg, memo) == 12);
    CHECK(gw(DivisorClass{4, {0, 0, 0, 0, 0, 2}}, 0, cfg, memo) == 96);
    // pinned by agreement of both independent engines
    CHECK(gw(DivisorClass{5, {2, 2, 2, 2, 0, 0}}, 0, cfg, memo) == 96);
}

TEST_CASE("pencil-region intermediates") {
    CHECK(run({DivisorClass{3, {0, 0, 0, 0, 0, 1}}, 0, e(1, 6), {}}) == 10);
    CHECK(run({DivisorClass{3, {0, 0, 0, 0, 0, 1}}, 0, e(1, 5), e(1)}) == 12);
}

TEST_CASE("conic-plus-line class: whole-curve degeneration term") {
    // By hand: 1 (fixed-contact pencil member) + 5 (cover plus line through
    // the matching point) + C(4,3) (conic plus pencil line, nothing left).
    DivisorClass A{3, {1, 1, 1, 1, 1, 1}};
    CHECK(run({A, 0, e(1), {}}) == 10);
    EvalConfig cfg;
    MemoCache memo("general", cfg.genus_offset);
    CHECK(gw(A, 0, cfg, memo) == 12);
}

TEST_CASE("initial values and guards through the public entry point") {
    CHECK(run({2 * line_pencil(1), 0, {}, e(2, 2)}) == 1);  // special family, s=2
    CHECK(run({line_pencil(1), 0, {}, e(1, 2)}) == 1);      // special family, s=1
    CHECK(run({line_pencil(3), 0, {}, e(6)}) == 2);         // tangent member
    CHECK(run({line_pencil(2), 0, e(2), e(2)}) == 1);       // fixed-contact member
    CHECK(run({2 * exceptional(3), 0, {}, e(2)}) == 1);     // double cover
    CHECK(run({DivisorClass{1, {1, 0, 0, 0, 0, 1}}, 0, {}, e(1)}) == 1);  // through one point
    CHECK(run({DivisorClass{2, {1, 0, 1, 0, 0, 1}}, 0, e(1, 2), {}}) == 1);  // box rule
    CHECK(run({2 * exceptional(1), 1, {}, e(2)}) == 0);     // genus above the bound
    CHECK(run({DivisorClass{1, {-1, 0, 0, 0, 0, 0}}, 0, {}, e(1, 3)}) == 0);
    CHECK(run({D1, -1, e(1, 2), {}}) == 0);                 // negative genus
    CHECK(run({DivisorClass{3, {1, 1, 1, 1, 1, 1}}, 2, {}, e(1)}) == 0);  // g=2 > 1
}

TEST_CASE("weight validation") {
    MemoCache memo("general", -1);
    EvalConfig cfg;
    CHECK_THROWS_AS(evaluate({line(), 0, {}, e(1)}, cfg, memo), std::invalid_argument);
    CHECK_THROWS_AS(evaluate({D1, 0, e(1, 3), {}}, cfg, memo), std::invalid_argument);
    CHECK_THROWS_AS(gw(fixed_conic() - 2 * line(), 0, cfg, memo), std::invalid_argument);
}

TEST_CASE("memoization does not change values") {
    Quadruple q{DivisorClass{3, {0, 0, 0, 0, 0, 1}}, 0, {}, e(1, 6)};
    EvalConfig plain;
    plain.use_memo = false;
    EvalConfig memoized;
    CHECK(run(q, plain) == run(q, memoized));
    CHECK(run(q, plain) == 12);
}

TEST_CASE("canonicalization does not change values") {
    EvalConfig raw;
    raw.canonicalize = false;
    CHECK(run({DivisorClass{3, {0, 1, 1, 1, 1, 0}}, 0, e(1, 2), {}}, raw) == 10);
    CHECK(run({DivisorClass{3, {1, 0, 1, 1, 1, 0}}, 0, {}, e(1, 2)}, raw) == 12);
}

TEST_CASE("genus tables") {
    EvalConfig cfg;
    MemoCache memo("general", cfg.genus_offset);
    auto t = genus_table(line(), cfg, memo);
    REQUIRE(t.size() == 1);
    CHECK(t[0].first == 0);
    CHECK(t[0].second == 1);

    CHECK(genus_table(line() + exceptional(1), cfg, memo).empty());  // negative genus bound

    auto t4 = genus_table(DivisorClass{4, {0, 0, 0, 0, 0, 2}}, cfg, memo);
    REQUIRE(t4.size() == 3);  // arithmetic genus bound 2
    CHECK(t4[0] == std::pair<long, Int>(0, Int(96)));
    CHECK(t4[1].first == 1);
    CHECK(t4[2].first == 2);
    CHECK(t4[1].second >= 0);
    CHECK(t4[2].second >= 0);

    EvalConfig threaded = cfg;
    threaded.threads = 2;
    MemoCache memo2("general", cfg.genus_offset);
    CHECK(genus_table(DivisorClass{4, {0, 0, 0, 0, 0, 2}}, threaded, memo2) == t4);
}

TEST_CASE("trace of a recursion with only first-order terms") {
    EvalConfig cfg;
    MemoCache memo("general", cfg.genus_offset);
    auto tr = evaluate_traced({line(), 0, {}, e(1, 2)}, cfg, memo);
    CHECK(tr.kind == TraceResult::Kind::recursion);
    CHECK(tr.value == 1);
    REQUIRE(tr.first_sum.size() == 1);
    CHECK(tr.first_sum[0].order == 1);
    CHECK(tr.first_sum[0].child == Quadruple{line(), 0, e(1), e(1)});
    CHECK(tr.first_sum[0].child_value == 1);
    CHECK(tr.first_sum[0].contribution == 1);
    CHECK(tr.splittings.empty());
}

TEST_CASE("trace of the planar-cubic recursion step") {
    EvalConfig cfg;
    MemoCache memo("general", cfg.genus_offset);
    auto tr = evaluate_traced({D1, 0, e(1, 2), {}}, cfg, memo);
    CHECK(tr.kind == TraceResult::Kind::recursion);
    CHECK(tr.value == 10);
    CHECK(tr.first_sum.empty());
    REQUIRE(tr.splittings.size() == 6);

    Int total = 0;
    bool saw_cover_pair = false;
    for (const auto& s : tr.splittings) {
        total += s.term;
        CHECK(s.k_factor == 1);  // k = 0 throughout
        if (s.parts.size() == 2 && s.parts[0].part.q.D == exceptional(5) &&
            s.parts[1].part.q == Quadruple{line(), 0, e(1), e(1)}) {
            saw_cover_pair = true;
            CHECK(s.alpha_multinomial == 2);
            CHECK(s.term == 2);
            CHECK(s.parts[0].counted);
            CHECK(s.parts[0].value == 1);
            CHECK(s.parts[1].value == 1);
        }
    }
    CHECK(saw_cover_pair);
    CHECK(total == 10);
}

TEST_CASE("trace kinds for non-recursive outcomes") {
    EvalConfig cfg;
    MemoCache memo("general", cfg.genus_offset);
    auto base = evaluate_traced({exceptional(1), 0, {}, e(1)}, cfg, memo);
    CHECK(base.kind == TraceResult::Kind::base);
    CHECK(base.value == 1);
    CHECK(base.first_sum.empty());
    CHECK(base.splittings.empty());

    auto fam = evaluate_traced({line_pencil(2), 0, {}, e(2, 2)}, cfg, memo);
    CHECK(fam.kind == TraceResult::Kind::special_family);
    CHECK(fam.value == 1);

    auto dead = evaluate_traced({2 * exceptional(1), 1, {}, e(2)}, cfg, memo);
    CHECK(dead.kind == TraceResult::Kind::zero_guard);
    CHECK(dead.value == 0);
}

TEST_CASE("stats are populated") {
    EvalConfig cfg;
    MemoCache memo("general", cfg.genus_offset);
    EvalStats st;
    CHECK(evaluate({D1, 0, e(1, 2), {}}, cfg, memo, &st) == 10);
    CHECK(st.evaluations.load() > 0);
    CHECK(st.splittings.load() >= 6);
    CHECK(memo.size() > 0);
}

}  // TEST_SUITE
