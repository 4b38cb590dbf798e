#include "inmatch/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "inmatch/bounds.hpp"
#include "inmatch/error.hpp"
#include "inmatch/families.hpp"
#include "inmatch/graph_io.hpp"
#include "inmatch/matching.hpp"
#include "inmatch/reduction.hpp"
#include "inmatch/scan.hpp"

namespace inmatch {

namespace {

struct source_flags {
    std::string g6;
    std::string file;
    std::string family;
    std::string format = "auto";
    std::size_t n = 20;
    double density = 0.5;
    std::uint64_t seed = 1;

    CLI::Option* g6_opt = nullptr;
    CLI::Option* file_opt = nullptr;
    CLI::Option* family_opt = nullptr;
};

void add_source_flags(CLI::App* cmd, source_flags& s) {
    s.g6_opt = cmd->add_option("--g6", s.g6, "inline graph6 line, or - to read one from stdin");
    s.file_opt = cmd->add_option("--file", s.file, "graph file (graph6 or edge list), or - for stdin");
    s.family_opt = cmd->add_option("--family", s.family,
                                   "c5sq | k33plus | h | doubleh | tripend | blown:a,b,c,d,e | random");
    cmd->add_option("--format", s.format, "file format")->check(CLI::IsMember({"auto", "g6", "edges"}));
    cmd->add_option("--n", s.n, "order for --family random");
    cmd->add_option("--density", s.density, "edge density for --family random")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", s.seed, "seed for --family random");
}

std::size_t source_count(const source_flags& s) {
    return s.g6_opt->count() + s.file_opt->count() + s.family_opt->count();
}

std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_text(const std::string& path, std::istream& in) {
    if (path == "-")
        return read_all(in);
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw error(errc::bad_token, "cannot open file '" + path + "'");
    return read_all(f);
}

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    for (std::string line; std::getline(ss, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t lead = line.find_first_not_of(" \t");
        if (lead == std::string::npos)
            continue;
        lines.push_back(line.substr(lead));
    }
    return lines;
}

graph family_graph(const source_flags& s) {
    const std::string& name = s.family;
    if (name == "c5sq")
        return c5_squared();
    if (name == "k33plus")
        return k33_plus();
    if (name == "h")
        return h_graph();
    if (name == "doubleh")
        return double_h();
    if (name == "tripend")
        return triangle_pendants();
    if (name == "random")
        return random_max_deg4(s.n, s.density, s.seed);
    if (name.starts_with("blown:")) {
        blown_cycle_spec spec;
        std::string_view rest = std::string_view(name).substr(6);
        for (std::size_t t = 0; t < 5; ++t) {
            std::size_t comma = rest.find(',');
            std::string_view tok = rest.substr(0, comma);
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
                throw error(errc::bad_spec, "bad part size '" + std::string(tok) + "' in " + name);
            spec.sizes[t] = value;
            if ((comma == std::string_view::npos) != (t == 4))
                throw error(errc::bad_spec, "blown family needs exactly five part sizes: " + name);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        return blown_c5(spec);
    }
    throw error(errc::bad_token, "unknown family '" + name + "'");
}

graph parse_graph_text(const std::string& text, const std::string& format) {
    if (format == "g6")
        return parse_graph6(content_lines(text).empty() ? std::string{} : content_lines(text).front());
    if (format == "edges")
        return parse_edge_list(text);
    auto lines = content_lines(text);
    if (!lines.empty() && lines.front().find_first_of(" \t") == std::string::npos)
        return parse_graph6(lines.front());
    return parse_edge_list(text);
}

graph load_source(const source_flags& s, std::istream& in) {
    if (source_count(s) != 1)
        throw error(errc::bad_token, "give exactly one of --g6, --file, --family");
    if (s.g6_opt->count()) {
        if (s.g6 == "-") {
            auto lines = content_lines(read_all(in));
            return parse_graph6(lines.empty() ? std::string{} : lines.front());
        }
        return parse_graph6(s.g6);
    }
    if (s.file_opt->count())
        return parse_graph_text(read_text(s.file, in), s.format);
    return family_graph(s);
}

std::string show_edges(const std::vector<edge>& edges) {
    std::string out;
    for (const auto& e : edges) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(e.a) + "-" + std::to_string(e.b);
    }
    return out.empty() ? "(none)" : out;
}

std::vector<edge> parse_edge_arg(const std::string& text) {
    std::vector<edge> out;
    std::string_view rest = text;
    while (!rest.empty()) {
        std::size_t comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        std::istringstream ss{std::string(item)};
        std::string a_tok, b_tok, extra;
        ss >> a_tok >> b_tok;
        if (a_tok.empty() || b_tok.empty() || (ss >> extra))
            throw error(errc::bad_token, "bad edge '" + std::string(item) + "' (expected \"u v\")");
        auto num = [&](const std::string& tok) {
            vertex_id v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw error(errc::bad_token, "bad vertex '" + tok + "'");
            return v;
        };
        out.emplace_back(num(a_tok), num(b_tok));
    }
    return out;
}

void print_report(std::ostream& out, const bound_report& r) {
    out << "n=" << r.n << " m=" << r.m << " isolated=" << r.isolated << " c5sq=" << r.c5sq << '\n';
    out << "matching_size=" << r.matching_size << " guarantee_ok=" << std::boolalpha << r.guarantee_ok
        << " (9*" << r.matching_size << " >= " << r.theorem_rhs_numerator() << ")\n";
    out << "m/20 ok=" << r.m20_ok;
    if (r.m18_applicable)
        out << " m/18 ok=" << r.m18_ok;
    else
        out << " m/18 n/a";
    out << '\n';
    out << "conjecture_ratio=" << (r.conjecture_ratio ? r.conjecture_ratio->str() : std::string("undefined"))
        << '\n';
}

int cmd_bound(const source_flags& s, bool json, const engine_options& opts, std::istream& in,
              std::ostream& out, std::ostream& err) {
    graph g = load_source(s, in);
    auto run = bounded_induced_matching(g, opts);
    auto verdict = verify_trace(g, run.trace, run.matching);
    auto recheck = check_induced_matching(g, run.matching.edges);
    if (json) {
        out << encode_report(run.report, run.matching, run.trace) << '\n';
    } else {
        print_report(out, run.report);
        out << "matching: " << show_edges(run.matching.edges) << '\n';
        std::size_t counts[4] = {};
        for (const auto& st : run.trace.steps)
            ++counts[static_cast<int>(st.kind)];
        out << "trace: " << run.trace.steps.size() << " steps (" << counts[0] << " reduction, " << counts[1]
            << " exact, " << counts[2] << " c5sq, " << counts[3] << " isolated, "
            << run.trace.fallback_count() << " fallback)\n";
    }
    if (!recheck.valid) {
        err << "error: matching failed re-verification: " << recheck.describe() << '\n';
        return exit_guarantee;
    }
    if (!verdict) {
        err << "error: trace check failed (" << to_string(*verdict.failed) << "): " << verdict.detail << '\n';
        return exit_guarantee;
    }
    if (!run.report.guarantee_ok) {
        err << "error: guarantee failed\n";
        return exit_guarantee;
    }
    return exit_ok;
}

int cmd_exact(const source_flags& s, bool json, std::size_t budget, std::istream& in, std::ostream& out) {
    graph g = load_source(s, in);
    auto res = exact_max_induced_matching_stats(g, budget);
    if (json) {
        nlohmann::ordered_json doc;
        doc["n"] = g.order();
        doc["m"] = g.size();
        doc["matching_size"] = res.matching.size();
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const auto& e : res.matching.edges)
            edges.push_back({e.a, e.b});
        doc["matching"] = std::move(edges);
        doc["nodes"] = res.nodes;
        out << doc.dump() << '\n';
    } else {
        out << "n=" << g.order() << " m=" << g.size() << '\n';
        out << "nu_s=" << res.matching.size() << " (" << res.nodes << " nodes)\n";
        out << "matching: " << show_edges(res.matching.edges) << '\n';
    }
    return exit_ok;
}

int cmd_verify(const source_flags& s, const std::string& edges_arg, bool json, std::istream& in,
               std::ostream& out) {
    graph g = load_source(s, in);
    auto edges = parse_edge_arg(edges_arg);
    auto check = check_induced_matching(g, edges);
    if (json) {
        nlohmann::ordered_json doc;
        doc["valid"] = check.valid;
        doc["size"] = edges.size();
        doc["reason"] = check.describe();
        out << doc.dump() << '\n';
    } else {
        out << (check.valid ? "valid" : "invalid") << ": " << check.describe() << '\n';
    }
    return check.valid ? exit_ok : exit_input;
}

int cmd_gen(const source_flags& s, const std::string& out_format, std::istream& in, std::ostream& out) {
    graph g = load_source(s, in);
    if (out_format == "edges")
        out << encode_edge_list(g);
    else
        out << encode_graph6(g) << '\n';
    return exit_ok;
}

int cmd_scan(const source_flags& s, bool json, bool use_exact, const scan_options& opts, std::istream& in,
             std::ostream& out) {
    std::vector<graph> sources;
    if (s.file_opt->count() && source_count(s) == 1) {
        for (const auto& line : content_lines(read_text(s.file, in)))
            sources.push_back(parse_graph6(line));
    } else {
        sources.push_back(load_source(s, in));
    }
    auto summary = conjecture_scan(sources, use_exact, opts);
    if (json) {
        out << encode_scan_summary(summary) << '\n';
        return exit_ok;
    }
    for (const auto& e : summary.entries) {
        out << e.index << ' ' << e.graph6 << " n=" << e.n << " m=" << e.m;
        if (e.skipped)
            out << " skipped: " << *e.skipped << '\n';
        else
            out << ' ' << (e.exact ? "nu_s=" : "nu_s>=") << e.value << " ratio=" << e.ratio->str() << '\n';
    }
    out << "scanned=" << summary.scanned << " skipped=" << summary.skipped;
    if (summary.min_ratio)
        out << " min_ratio=" << summary.min_ratio->str() << (summary.argmin_exact ? "" : " (lower estimate)")
            << " at " << summary.argmin_graph6;
    out << " counterexample=" << std::boolalpha << summary.counterexample << '\n';
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Induced matchings in graphs of maximum degree at most 4", "inmatch"};
    app.require_subcommand(1);

    bool json = false;
    source_flags bound_src, exact_src, verify_src, gen_src, scan_src;
    engine_options eopts;
    eopts.fallback_exact = true;
    bool no_fallback = false;
    std::size_t node_budget = default_node_budget;
    std::string edges_arg;
    std::string out_format = "g6";
    bool no_exact = false;
    scan_options sopts;

    auto* bound = app.add_subcommand("bound", "compute and verify an induced matching meeting the n/9 bound");
    add_source_flags(bound, bound_src);
    bound->add_flag("--json", json, "print the JSON report");
    bound->add_option("--exact-threshold", eopts.exact_threshold, "solve components up to this order exactly");
    bound->add_flag("--no-fallback", no_fallback, "fail instead of solving exactly when the search fails");
    bound->add_option("--node-budget", node_budget, "branch-and-bound node budget");

    auto* exact = app.add_subcommand("exact", "maximum induced matching by branch and bound");
    add_source_flags(exact, exact_src);
    exact->add_flag("--json", json, "print JSON");
    exact->add_option("--node-budget", node_budget, "branch-and-bound node budget");

    auto* verify = app.add_subcommand("verify", "check that an edge set is an induced matching");
    add_source_flags(verify, verify_src);
    verify->add_option("--edges", edges_arg, "edges as \"u v,u v,...\"")->required();
    verify->add_flag("--json", json, "print JSON");

    auto* gen = app.add_subcommand("gen", "emit a named family or random graph");
    add_source_flags(gen, gen_src);
    gen->add_option("--out-format", out_format, "g6 or edges")->check(CLI::IsMember({"g6", "edges"}));

    auto* scan = app.add_subcommand("scan", "look for small 17*nu_s/m over graph6 lines");
    add_source_flags(scan, scan_src);
    scan->add_flag("--json", json, "print JSON");
    scan->add_flag("--no-exact", no_exact, "use the bounded engine only");
    scan->add_option("--exact-limit", sopts.exact_limit, "largest order solved exactly");
    scan->add_option("--threads", sopts.threads, "worker threads")->check(CLI::Range(1U, 256U));
    scan->add_option("--node-budget", node_budget, "branch-and-bound node budget");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }

    eopts.fallback_exact = !no_fallback;
    eopts.node_budget = node_budget;
    sopts.node_budget = node_budget;

    try {
        if (bound->parsed())
            return cmd_bound(bound_src, json, eopts, in, out, err);
        if (exact->parsed())
            return cmd_exact(exact_src, json, node_budget, in, out);
        if (verify->parsed())
            return cmd_verify(verify_src, edges_arg, json, in, out);
        if (gen->parsed())
            return cmd_gen(gen_src, out_format, in, out);
        if (scan->parsed())
            return cmd_scan(scan_src, json, !no_exact, sopts, in, out);
    } catch (const budget_exhausted& e) {
        err << "error: " << e.what() << '\n';
        return exit_budget;
    } catch (const theorem_violation& e) {
        err << "error: " << e.what() << " (graph6 " << encode_graph6(e.component()) << ")\n";
        return exit_guarantee;
    } catch (const error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}

} // namespace inmatch
