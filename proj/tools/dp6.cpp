// Command-line surface for the relative-invariant engines: parse a query,
// run an engine, and emit values, tables, traces, or the verification suite.
//
// Exit codes: 0 success; 1 verification failure; 2 parse/validation error;
// 3 internal assertion (an always-on consistency check fired).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dp6/engine.hpp"
#include "dp6/genus_zero.hpp"
#include "dp6/verify.hpp"

namespace {

using dp6::Int;
using nlohmann::json;

// Thrown for every user-input problem; mapped to exit code 2.
struct UserError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string D;
    std::string g = "0";
    std::string alpha;
    std::string beta;
    bool beta_given = false;
    std::string engine = "general";
    std::string cache;
    int genus_offset = -1;
    bool genus_offset_given = false;
    int threads = 1;
    bool json_out = false;
};

dp6::DivisorClass need_class(const std::string& s) {
    auto D = dp6::parse_class(s);
    if (!D) throw UserError("cannot parse divisor class '" + s + "'");
    return *D;
}

dp6::TangencyVector need_tangency(const std::string& s, const char* which) {
    auto v = dp6::parse_tangency(s);
    if (!v) throw UserError(std::string("cannot parse ") + which + " vector '" + s + "'");
    return *v;
}

// g flag: a nonnegative integer or the word "all".
std::optional<long> parse_genus(const std::string& s) {
    if (s == "all") return std::nullopt;
    try {
        size_t pos = 0;
        long g = std::stol(s, &pos);
        if (pos != s.size()) throw UserError("trailing characters in --g '" + s + "'");
        return g;
    } catch (const UserError&) {
        throw;
    } catch (const std::exception&) {
        throw UserError("--g expects an integer or 'all', got '" + s + "'");
    }
}

dp6::Quadruple build_query(const Options& o, long g) {
    dp6::DivisorClass D = need_class(o.D);
    dp6::TangencyVector alpha =
        o.alpha.empty() ? dp6::TangencyVector{} : need_tangency(o.alpha, "alpha");
    dp6::TangencyVector beta;
    if (o.beta_given) {
        beta = need_tangency(o.beta, "beta");
    } else {
        long de = dp6::e_degree(D);
        if (de < 0)
            throw UserError("D.E = " + std::to_string(de) +
                            " < 0: no default beta exists for this class");
        if (de > 0) beta = dp6::TangencyVector::unit(1, de);
    }
    dp6::Quadruple q{D, g, alpha, beta};
    auto v = dp6::validate(q);
    if (!v.weight_ok)
        throw UserError("Ialpha+Ibeta=" + std::to_string(v.weight_sum) +
                        " != DE=" + std::to_string(v.degree));
    return q;
}

void check_engine_flags(const Options& o, bool tracing) {
    if (o.engine != "general" && o.engine != "genus0")
        throw UserError("--engine must be 'general' or 'genus0'");
    if (o.genus_offset != -1 && o.genus_offset != 1)
        throw UserError("--genus-offset must be -1 or +1");
    if (o.engine == "genus0" && o.genus_offset_given)
        throw UserError("--genus-offset applies to the general engine only");
    if (o.engine == "genus0" && tracing)
        throw UserError("--trace supports the general engine only");
    if (o.threads < 1) throw UserError("--threads must be >= 1");
}

std::string cache_path(const Options& o) {
    if (!o.cache.empty()) return o.cache;
    if (const char* env = std::getenv("DP6_CACHE")) return env;
    return {};
}

void load_cache(dp6::MemoCache& memo, const std::string& path) {
    if (path.empty() || !std::filesystem::exists(path)) return;
    try {
        memo.load(path);
    } catch (const std::exception& e) {
        throw UserError("cannot load cache '" + path + "': " + e.what());
    }
}

void save_cache(const dp6::MemoCache& memo, const std::string& path) {
    if (path.empty()) return;
    memo.save(path);
}

json stats_json(const dp6::MemoCache& memo, const dp6::EvalStats& stats, double wall_ms) {
    return json{{"memo_hits", memo.hits()},
                {"memo_size", memo.size()},
                {"splittings_enumerated", stats.splittings.load()},
                {"wall_ms", wall_ms}};
}

json query_json(const dp6::Quadruple& q) {
    return json{{"D", dp6::format_class(q.D)},
                {"g", q.g},
                {"alpha", dp6::format_tangency(q.alpha)},
                {"beta", dp6::format_tangency(q.beta)}};
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ------------------------------------------------------------------- compute
int cmd_compute(const Options& o) {
    check_engine_flags(o, false);
    auto genus = parse_genus(o.g);

    dp6::EvalConfig cfg;
    cfg.genus_offset = o.genus_offset;
    cfg.threads = o.threads;
    dp6::MemoCache memo(o.engine, o.genus_offset);
    std::string path = cache_path(o);
    load_cache(memo, path);
    dp6::EvalStats stats;
    auto t0 = std::chrono::steady_clock::now();

    if (!genus) {  // --g all: the whole genus column
        if (o.engine == "genus0")
            throw UserError("--g all needs the general engine (genus0 computes g=0 only)");
        dp6::DivisorClass D = need_class(o.D);
        if (!o.alpha.empty() || o.beta_given)
            throw UserError("--g all uses the no-fixed-contact convention; "
                            "drop --alpha/--beta");
        auto rows = dp6::genus_table(D, cfg, memo, &stats);
        save_cache(memo, path);
        if (o.json_out) {
            json tbl = json::array();
            for (const auto& [g, v] : rows) tbl.push_back({{"g", g}, {"value", v.str()}});
            json out{{"query", {{"D", dp6::format_class(D)}, {"g", "all"}}},
                     {"engine", o.engine},
                     {"genus_offset", o.genus_offset},
                     {"table", tbl},
                     {"stats", stats_json(memo, stats, ms_since(t0))}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "g,N\n";
            for (const auto& [g, v] : rows) std::cout << g << "," << v.str() << "\n";
        }
        return 0;
    }

    dp6::Quadruple q = build_query(o, *genus);
    Int value;
    if (o.engine == "genus0") {
        if (q.g != 0) throw UserError("engine genus0 computes g=0 only, got g=" +
                                      std::to_string(q.g));
        value = dp6::evaluate0(q.D, q.alpha, q.beta, memo, &stats);
    } else {
        value = dp6::evaluate(q, cfg, memo, &stats);
    }
    save_cache(memo, path);

    if (o.json_out) {
        json out{{"query", query_json(q)},
                 {"engine", o.engine},
                 {"genus_offset", o.genus_offset},
                 {"value", value.str()},
                 {"stats", stats_json(memo, stats, ms_since(t0))}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
    return 0;
}

// --------------------------------------------------------------------- table
int cmd_table(const Options& o) {
    Options adjusted = o;
    adjusted.g = "all";
    return cmd_compute(adjusted);
}

// --------------------------------------------------------------------- trace
int cmd_trace(const Options& o) {
    check_engine_flags(o, true);
    auto genus = parse_genus(o.g);
    if (!genus) throw UserError("trace needs a single genus, not 'all'");
    dp6::Quadruple q = build_query(o, *genus);

    dp6::EvalConfig cfg;
    cfg.genus_offset = o.genus_offset;
    dp6::MemoCache memo("general", o.genus_offset);
    std::string path = cache_path(o);
    load_cache(memo, path);
    dp6::TraceResult tr = dp6::evaluate_traced(q, cfg, memo);

    auto kind_name = [](dp6::TraceResult::Kind k) {
        switch (k) {
            case dp6::TraceResult::Kind::zero_guard: return "zero-guard";
            case dp6::TraceResult::Kind::special_family: return "special-family";
            case dp6::TraceResult::Kind::base: return "base";
            case dp6::TraceResult::Kind::recursion: return "recursion";
        }
        return "?";
    };

    if (o.json_out) {
        json first = json::array();
        for (const auto& t : tr.first_sum)
            first.push_back({{"order", t.order},
                             {"child", dp6::key(t.child)},
                             {"child_value", t.child_value.str()},
                             {"contribution", t.contribution.str()}});
        json splits = json::array();
        for (const auto& s : tr.splittings) {
            json parts = json::array();
            for (const auto& p : s.parts)
                parts.push_back({{"part", dp6::key(p.part.q)},
                                 {"gamma", dp6::format_tangency(p.part.gamma)},
                                 {"n_i", p.n_i},
                                 {"value", p.value.str()},
                                 {"beta_choose_gamma", p.beta_choose_gamma.str()},
                                 {"gamma_weight", p.gamma_weight.str()},
                                 {"counted", p.counted}});
            splits.push_back({{"k", s.k},
                              {"k_factor", s.k_factor.str()},
                              {"alpha_multinomial", s.alpha_multinomial.str()},
                              {"point_multinomial", s.point_multinomial.str()},
                              {"rep_divisor", s.rep_divisor.str()},
                              {"term", s.term.str()},
                              {"parts", parts}});
        }
        json out{{"query", query_json(q)},
                 {"engine", "general"},
                 {"genus_offset", o.genus_offset},
                 {"kind", kind_name(tr.kind)},
                 {"value", tr.value.str()},
                 {"first_sum", first},
                 {"splittings", splits}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "query: " << dp6::key(q) << "\n";
    std::cout << "kind: " << kind_name(tr.kind) << "\n";
    std::cout << "value: " << tr.value.str() << "\n";
    if (!tr.first_sum.empty()) {
        std::cout << "first sum (move one moving contact to a fixed point):\n";
        for (const auto& t : tr.first_sum)
            std::cout << "  j=" << t.order << "  N[" << dp6::key(t.child)
                      << "] = " << t.child_value.str() << "  -> " << t.contribution.str()
                      << "\n";
    }
    if (!tr.splittings.empty()) {
        std::cout << "splittings (break off the conic plus k pencil lines):\n";
        for (const auto& s : tr.splittings) {
            std::cout << "  k=" << s.k << "  C(k+3,3)=" << s.k_factor.str()
                      << "  alpha-multinomial=" << s.alpha_multinomial.str()
                      << "  point-multinomial=" << s.point_multinomial.str()
                      << "  rep-divisor=" << s.rep_divisor.str() << "  term=" << s.term.str()
                      << "\n";
            for (const auto& p : s.parts) {
                std::cout << "    part " << dp6::key(p.part.q)
                          << "  gamma=" << dp6::format_tangency(p.part.gamma)
                          << "  n_i=" << p.n_i << "  N=" << p.value.str();
                if (p.counted)
                    std::cout << "  C(beta,gamma)=" << p.beta_choose_gamma.str()
                              << "  I^gamma=" << p.gamma_weight.str();
                else
                    std::cout << "  (fixed-contact family: no choose factor)";
                std::cout << "\n";
            }
        }
    }
    return 0;
}

// -------------------------------------------------------------------- verify
int cmd_verify(const std::string& suite, int threads, bool json_out) {
    if (suite != "quick" && suite != "full")
        throw UserError("--suite must be 'quick' or 'full'");
    auto s = suite == "quick" ? dp6::verify::Suite::quick : dp6::verify::Suite::full;

    bool all_pass = true;
    json rows = json::array();
    auto results = dp6::verify::run_suite(s, threads, [&](const dp6::verify::CriterionResult& r) {
        if (json_out) return;  // emit once at the end
        std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name
                  << "  [" << static_cast<long>(r.wall_ms) << " ms]\n      " << r.detail
                  << "\n";
        std::cout.flush();
    });
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        rows.push_back({{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"detail", r.detail},
                        {"wall_ms", r.wall_ms}});
    }
    if (json_out) {
        std::cout << json{{"suite", suite}, {"all_pass", all_pass}, {"criteria", rows}}.dump(2)
                  << "\n";
    } else {
        std::cout << (all_pass ? "all criteria passed\n" : "SUITE FAILED\n");
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact relative enumerative invariants of the plane blown up at six points"};
    app.require_subcommand(1);

    Options o;
    std::string suite = "quick";
    bool trace_flag = false;

    auto add_common = [&](CLI::App* sc, bool with_query) {
        if (with_query) {
            sc->add_option("--D", o.D, "divisor class, e.g. 6L-2E1-2E2-2E3-2E4-2E5-2E6")
                ->required();
            sc->add_option("--alpha", o.alpha, "fixed tangencies 'order:count,...' (default none)");
            sc->add_option("--beta", o.beta,
                           "moving tangencies 'order:count,...' (default (D.E) simple contacts)");
        }
        sc->add_option("--cache", o.cache, "memo cache file (default: env DP6_CACHE)");
        sc->add_option("--genus-offset", o.genus_offset,
                       "gluing-genus bookkeeping: -1 (default) or +1 (printed variant)");
        sc->add_option("--threads", o.threads, "worker cap for independent top-level queries");
        sc->add_flag("--json", o.json_out, "machine-readable output");
    };

    auto* compute = app.add_subcommand("compute", "evaluate one invariant (or a genus column)");
    compute->add_option("--g", o.g, "genus: integer or 'all'");
    compute->add_option("--engine", o.engine, "general (any genus) or genus0 (independent)");
    compute->add_flag("--trace", trace_flag, "emit per-term records instead of a bare value");
    add_common(compute, true);

    auto* table = app.add_subcommand("table", "genus 0..g_max(D) table for a class");
    table->add_option("--engine", o.engine, "must be 'general'");
    add_common(table, true);

    auto* trace = app.add_subcommand("trace", "evaluate with per-term records");
    trace->add_option("--g", o.g, "genus (integer)");
    add_common(trace, true);

    auto* verify = app.add_subcommand("verify", "run the verification criteria");
    verify->add_option("--suite", suite, "quick or full");
    verify->add_option("--threads", o.threads, "worker cap");
    verify->add_flag("--json", o.json_out, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    for (CLI::App* sc : {compute, table, trace}) {
        if (!sc->parsed()) continue;
        o.beta_given = sc->count("--beta") > 0;
        o.genus_offset_given = sc->count("--genus-offset") > 0;
    }

    try {
        if (compute->parsed()) return trace_flag ? cmd_trace(o) : cmd_compute(o);
        if (table->parsed()) return cmd_table(o);
        if (trace->parsed()) return cmd_trace(o);
        if (verify->parsed()) return cmd_verify(suite, o.threads, o.json_out);
        return 2;
    } catch (const UserError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
