// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "inmatch/bounds.hpp"
#include "inmatch/families.hpp"
#include "inmatch/graph_io.hpp"
#include "inmatch/matching.hpp"
#include "inmatch/reduction.hpp"
#include "oracles.hpp"

using namespace inmatch;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct check_log {
    bool ok = true;
    std::string first_failure;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

std::size_t ceil9(std::size_t x) { return (x + 8) / 9; }

// Seeded graph of order n with maximum degree at most 4. Every fifth seed with
// room for it gets a planted C5^2 component so n5 > 0 is exercised.
graph suite_graph(std::uint64_t seed, std::size_t n) {
    double density = 0.3 + 0.1 * static_cast<double>(seed % 8);
    if (seed % 5 != 0 || n < 12)
        return random_max_deg4(n, density, seed);
    auto rest = random_max_deg4(n - 10, density, seed);
    std::vector<edge> es = c5_squared().edges();
    for (auto e : rest.edges())
        es.emplace_back(e.a + 10, e.b + 10);
    return relabel(build_graph(n, es), oracle::permutation(n, static_cast<unsigned>(seed)));
}

bool has_single_cut_vertex(const graph& g, vertex_id expected) {
    std::size_t cuts = 0;
    bool expected_is_cut = false;
    for (vertex_id v = 0; v < g.order(); ++v) {
        std::vector<vertex_id> keep;
        for (vertex_id w = 0; w < g.order(); ++w)
            if (w != v)
                keep.push_back(w);
        if (!is_connected(induced_subgraph(g, keep).g)) {
            ++cuts;
            expected_is_cut = expected_is_cut || v == expected;
        }
    }
    return cuts == 1 && expected_is_cut;
}

check_log c5_squared_sharpness() {
    check_log log;
    auto g = c5_squared();
    auto run = bounded_induced_matching(g);
    log.expect(run.matching.size() == 1, "engine size != 1");
    log.expect(exact_max_induced_matching(g).size() == 1, "exact size != 1");
    log.expect(run.report.c5sq == 1, "n5 != 1");
    log.expect(20 * run.report.matching_size == run.report.m, "20*size != m");
    log.expect(run.report.m20_ok, "m20 flag false");
    log.expect(verify_trace(g, run.trace, run.matching).ok, "trace rejected");
    return log;
}

check_log triangle_pendants_sharpness() {
    check_log log;
    auto g = triangle_pendants();
    engine_options opts;
    opts.exact_threshold = 0;
    auto run = bounded_induced_matching(g, opts);
    std::size_t target = ceil9(g.order() - isolated_count(g) - c5_squared_components(g));
    log.expect(target == 1, "ceil((n-i-n5)/9) != 1");
    log.expect(run.matching.size() == 1, "engine size != 1");
    log.expect(exact_max_induced_matching(g).size() == 1, "exact size != 1");
    auto v = verify_trace(g, run.trace, run.matching);
    log.expect(v.ok, "trace rejected: " + v.detail);
    std::size_t reductions = 0;
    for (const auto& s : run.trace.steps) {
        if (s.red) {
            ++reductions;
            log.expect(s.red->budget_lhs == 9 && s.red->budget_rhs == 9, "budget is not 9 = 9");
        } else {
            log.expect(s.kind == step_kind::isolated_leaf, "leaf other than an isolated vertex");
        }
    }
    log.expect(reductions == 1, "expected exactly one reduction step");
    return log;
}

check_log double_h_ratio() {
    check_log log;
    auto g = double_h();
    log.expect(g.order() == 17, "n != 17");
    log.expect(g.size() == 34, "m != 34");
    log.expect(g.max_degree() == 4, "max degree != 4");
    log.expect(g.degree(double_h_glue_vertex) == 4, "glue vertex degree != 4");
    log.expect(has_single_cut_vertex(g, double_h_glue_vertex), "glue vertex is not the unique cut vertex");
    auto exact = exact_max_induced_matching(g);
    log.expect(exact.size() == 2, "exact != 2");
    auto report = make_bound_report(g, exact.size());
    log.expect(report.conjecture_ratio && *report.conjecture_ratio == rational(1, 1), "ratio is not 1/1");
    return log;
}

struct suite4_run {
    graph g;
    bound_report report;
};

check_log theorem_property(std::vector<suite4_run>& runs, double& slowest) {
    check_log log;
    for (std::uint64_t seed = 0; seed < 600; ++seed) {
        std::size_t n = 1 + seed % 60;
        auto g = suite_graph(seed, n);
        engine_options opts;
        opts.fallback_exact = false;
        auto t0 = clock_type::now();
        try {
            auto run = bounded_induced_matching(g, opts);
            double dt = seconds_since(t0);
            slowest = std::max(slowest, dt);
            std::string tag = "seed " + std::to_string(seed) + ": ";
            log.expect(g.max_degree() <= 4, tag + "degree above 4");
            log.expect(is_induced_matching(g, run.matching.edges), tag + "not an induced matching");
            auto v = verify_trace(g, run.trace, run.matching);
            log.expect(v.ok, tag + "trace rejected: " + v.detail);
            log.expect(9 * run.matching.size() + run.report.isolated + run.report.c5sq >= n,
                       tag + "9|M| < n - i - n5");
            log.expect(run.report.guarantee_ok, tag + "guarantee flag false");
            log.expect(run.trace.fallback_count() == 0, tag + "fallback used");
            log.expect(dt < 2.0, tag + "run took >= 2 s");
            runs.push_back({g, run.report});
        } catch (const theorem_violation&) {
            log.expect(false, "seed " + std::to_string(seed) + ": theorem violation");
        }
    }
    log.expect(runs.size() >= 500, "fewer than 500 runs");
    return log;
}

check_log oracle_sandwich() {
    check_log log;
    std::size_t sandwiched = 0, enumerated = 0;
    for (std::uint64_t seed = 1000; seed < 1240; ++seed) {
        std::size_t n = 1 + seed % 16;
        auto g = suite_graph(seed, n);
        auto engine = bounded_induced_matching(g).matching.size();
        auto exact = exact_max_induced_matching(g).size();
        std::size_t floor = ceil9(n - isolated_count(g) - c5_squared_components(g));
        std::string tag = "seed " + std::to_string(seed) + ": ";
        log.expect(exact >= engine, tag + "engine beats exact");
        log.expect(engine >= floor, tag + "engine below ceil((n-i-n5)/9)");
        ++sandwiched;
        if (n <= 10) {
            log.expect(exact == oracle::naive_max_induced_matching(g), tag + "exact != enumeration");
            ++enumerated;
        }
    }
    log.expect(sandwiched >= 200, "fewer than 200 sandwich graphs");
    log.expect(enumerated >= 50, "fewer than 50 enumeration graphs");
    return log;
}

check_log corollaries(const std::vector<suite4_run>& runs) {
    check_log log;
    for (const auto& r : runs) {
        auto c = corollary_check(r.report);
        log.expect(c.ok, c.violations.empty() ? "corollary failed" : c.violations.front());
        log.expect(r.report.m <= 2 * (r.report.n - r.report.isolated), "m > 2(n-i)");
    }
    log.expect(!runs.empty(), "no runs from the property suite");
    return log;
}

check_log codec() {
    check_log log;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        auto g = random_max_deg4(seed % 80, 0.2 + 0.1 * static_cast<double>(seed % 9), seed);
        auto text = encode_graph6(g);
        auto back = parse_graph6(text);
        log.expect(back == g, "decode mismatch at seed " + std::to_string(seed));
        log.expect(encode_graph6(back) == text, "re-encode mismatch at seed " + std::to_string(seed));
    }
    auto k1 = parse_graph6("@"), k2 = parse_graph6("A_"), k3 = parse_graph6("Bw");
    log.expect(k1.order() == 1 && k1.size() == 0, "@ is not K1");
    log.expect(k2.order() == 2 && k2.size() == 1, "A_ is not K2");
    log.expect(k3.order() == 3 && k3.size() == 3, "Bw is not K3");
    return log;
}

check_log recognizer() {
    check_log log;
    auto sq = c5_squared();
    for (unsigned seed = 0; seed < 100; ++seed)
        log.expect(is_c5_squared(relabel(sq, oracle::permutation(10, seed))), "relabelled C5^2 rejected");
    log.expect(!is_c5_squared(oracle::cycle_square(10)), "C10^2 accepted");
    for (auto drop : sq.edges()) {
        std::vector<edge> es;
        for (auto e : sq.edges())
            if (e != drop)
                es.push_back(e);
        log.expect(!is_c5_squared(build_graph(10, es)), "C5^2 minus an edge accepted");
    }
    return log;
}

bool report(int id, const char* name, const std::function<check_log()>& body, double limit) {
    auto t0 = clock_type::now();
    check_log log;
    try {
        log = body();
    } catch (const std::exception& e) {
        log.expect(false, std::string("exception: ") + e.what());
    }
    double dt = seconds_since(t0);
    if (limit > 0)
        log.expect(dt < limit, "time limit exceeded");
    std::printf("%s %d %s (%.3f s)%s%s\n", log.ok ? "PASS" : "FAIL", id, name, dt, log.ok ? "" : ": ",
                log.first_failure.c_str());
    return log.ok;
}

} // namespace

int main() {
    std::vector<suite4_run> runs;
    double slowest = 0;
    bool ok = true;
    ok &= report(1, "sharpness on C5^2", c5_squared_sharpness, 1.0);
    ok &= report(2, "sharpness on triangle with pendants", triangle_pendants_sharpness, 1.0);
    ok &= report(3, "double H ratio", double_h_ratio, 5.0);
    ok &= report(4, "guarantee on 600 seeded graphs", [&] { return theorem_property(runs, slowest); }, 0);
    std::printf("     slowest run %.4f s\n", slowest);
    ok &= report(5, "oracle sandwich", oracle_sandwich, 60.0);
    ok &= report(6, "edge-count corollaries", [&] { return corollaries(runs); }, 0);
    ok &= report(7, "graph6 codec", codec, 0);
    ok &= report(8, "C5^2 recogniser", recognizer, 0);
    return ok ? 0 : 1;
}
