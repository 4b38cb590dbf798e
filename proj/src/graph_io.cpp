#include "inmatch/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "inmatch/error.hpp"

namespace inmatch {

namespace {

constexpr unsigned char g6_min = 63;
constexpr unsigned char g6_max = 126;

std::size_t body_bytes(std::size_t n) {
    const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    return (bits + 5) / 6;
}

unsigned char g6_value(std::string_view text, std::size_t pos) {
    auto byte = static_cast<unsigned char>(text[pos]);
    if (byte < g6_min || byte > g6_max)
        throw error(errc::byte_out_of_range,
                    "graph6 byte " + std::to_string(byte) + " at offset " + std::to_string(pos) +
                        " outside 63..126");
    return static_cast<unsigned char>(byte - g6_min);
}

} // namespace

graph parse_graph6(std::string_view text) {
    if (!text.empty() && text.back() == '\n')
        text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r')
        text.remove_suffix(1);
    if (text.empty())
        throw error(errc::malformed_header, "empty graph6 line");
    if (text.starts_with(">>graph6<<"))
        throw error(errc::malformed_header, "graph6 file header prefix not supported");

    std::size_t n = 0;
    std::size_t pos = 0;
    if (static_cast<unsigned char>(text[0]) != g6_max) {
        n = g6_value(text, 0);
        pos = 1;
    } else {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == g6_max)
            throw error(errc::malformed_header, "8-byte graph6 size header not supported");
        if (text.size() < 4)
            throw error(errc::malformed_header, "graph6 size header cut short");
        n = (std::size_t{g6_value(text, 1)} << 12) | (std::size_t{g6_value(text, 2)} << 6) |
            g6_value(text, 3);
        if (n < 63)
            throw error(errc::malformed_header,
                        "4-byte graph6 header used for order " + std::to_string(n));
        pos = 4;
    }

    const std::size_t need = body_bytes(n);
    const std::size_t have = text.size() - pos;
    for (std::size_t i = pos; i < text.size(); ++i)
        g6_value(text, i);
    if (have < need)
        throw error(errc::truncated_body, "graph6 body has " + std::to_string(have) + " bytes, expected " +
                                              std::to_string(need));
    if (have > need)
        throw error(errc::trailing_garbage,
                    "graph6 line has " + std::to_string(have - need) + " bytes past the body");

    std::vector<edge> edges;
    std::size_t bit = 0;
    for (vertex_id j = 1; j < n; ++j)
        for (vertex_id i = 0; i < j; ++i, ++bit) {
            unsigned char v = g6_value(text, pos + bit / 6);
            if ((v >> (5 - bit % 6)) & 1U)
                edges.emplace_back(i, j);
        }
    for (; bit < need * 6; ++bit)
        if ((g6_value(text, pos + bit / 6) >> (5 - bit % 6)) & 1U)
            throw error(errc::trailing_garbage, "graph6 padding bits are not zero");
    return build_graph(n, edges);
}

std::string encode_graph6(const graph& g) {
    const std::size_t n = g.order();
    if (n > graph6_max_order)
        throw error(errc::graph_too_large,
                    "order " + std::to_string(n) + " exceeds the 4-byte graph6 header");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + g6_min));
    } else {
        out.push_back(static_cast<char>(g6_max));
        out.push_back(static_cast<char>(((n >> 12) & 63) + g6_min));
        out.push_back(static_cast<char>(((n >> 6) & 63) + g6_min));
        out.push_back(static_cast<char>((n & 63) + g6_min));
    }
    std::vector<unsigned char> body(body_bytes(n), 0);
    // Bit index of pair (i, j), i < j, in column order.
    for (const auto& e : g.edges()) {
        std::size_t bit = std::size_t{e.b} * (e.b - 1) / 2 + e.a;
        body[bit / 6] |= static_cast<unsigned char>(1U << (5 - bit % 6));
    }
    for (auto v : body)
        out.push_back(static_cast<char>(v + g6_min));
    return out;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_count(std::string_view tok, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw error(errc::bad_token,
                    "line " + std::to_string(line_no) + ": bad token '" + std::string(tok) + "'");
    return value;
}

} // namespace

graph parse_edge_list(std::string_view text) {
    std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
    std::vector<std::pair<vertex_id, vertex_id>> pairs;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto toks = split_tokens(line);
        if (toks.empty())
            continue;
        if (toks.size() != 2)
            throw error(errc::bad_token, "line " + std::to_string(line_no) + ": expected two integers");
        std::uint64_t x = parse_count(toks[0], line_no);
        std::uint64_t y = parse_count(toks[1], line_no);
        if (!header) {
            if (x >= no_vertex)
                throw error(errc::graph_too_large, "line " + std::to_string(line_no) + ": order too large");
            header = std::pair{x, y};
            continue;
        }
        if (x >= header->first || y >= header->first)
            throw error(errc::vertex_out_of_range,
                        "line " + std::to_string(line_no) + ": vertex " + std::to_string(std::max(x, y)) +
                            " out of range for order " + std::to_string(header->first));
        if (x == y)
            throw error(errc::self_loop, "line " + std::to_string(line_no) + ": self-loop at vertex " +
                                             std::to_string(x));
        pairs.emplace_back(static_cast<vertex_id>(x), static_cast<vertex_id>(y));
    }
    if (!header)
        throw error(errc::bad_token, "missing \"n m\" header line");
    if (pairs.size() != header->second)
        throw error(errc::count_mismatch, "header announces " + std::to_string(header->second) +
                                              " edges, found " + std::to_string(pairs.size()));
    return build_graph(header->first, pairs);
}

std::string encode_edge_list(const graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges())
        out << e.a << ' ' << e.b << '\n';
    return out.str();
}

std::string encode_report(const bound_report& r, const induced_matching& m, const reduction_trace& t) {
    std::size_t owned = 0;
    for (const auto& s : t.steps)
        owned += s.red ? s.red->ball.size() : s.component.size();
    if (r.n != m.graph_order || r.matching_size != m.size() || t.contributed_total() != m.size() ||
        owned != r.n)
        throw error(errc::inconsistent_inputs, "report, matching and trace describe different runs");

    using nlohmann::ordered_json;
    ordered_json doc;
    doc["n"] = r.n;
    doc["m"] = r.m;
    doc["isolated"] = r.isolated;
    doc["c5sq_components"] = r.c5sq;
    doc["matching_size"] = r.matching_size;
    doc["guarantee_ok"] = r.guarantee_ok;
    doc["ratio_m_over_20_ok"] = r.m20_ok;
    doc["conjecture_ratio"] = r.conjecture_ratio ? ordered_json(r.conjecture_ratio->to_double()) : ordered_json();

    std::vector<edge> edges = m.edges;
    std::sort(edges.begin(), edges.end());
    ordered_json matching = ordered_json::array();
    for (const auto& e : edges)
        matching.push_back({e.a, e.b});
    doc["matching"] = std::move(matching);

    ordered_json trace = ordered_json::array();
    for (const auto& s : t.steps) {
        ordered_json step;
        // Leaves have no marks; their "ball" is the whole component.
        step["kind"] = to_string(s.kind);
        step["k"] = s.red ? s.red->k() : 0;
        step["ball_size"] = s.red ? s.red->ball.size() : s.component.size();
        step["isolated_after"] = s.red ? s.red->isolated_after : 0;
        if (s.fallback)
            step["fallback"] = true;
        trace.push_back(std::move(step));
    }
    doc["trace"] = std::move(trace);
    return doc.dump();
}

std::string encode_scan_summary(const scan_summary& s) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["scanned"] = s.scanned;
    doc["skipped"] = s.skipped;
    doc["min_ratio"] = s.min_ratio ? ordered_json(s.min_ratio->to_double()) : ordered_json();
    doc["min_ratio_exact"] = s.min_ratio ? ordered_json(s.min_ratio->str()) : ordered_json();
    doc["argmin_index"] = s.argmin_index ? ordered_json(*s.argmin_index) : ordered_json();
    doc["argmin_graph6"] = s.argmin_index ? ordered_json(s.argmin_graph6) : ordered_json();
    doc["argmin_exact"] = s.argmin_exact;
    doc["counterexample"] = s.counterexample;
    ordered_json entries = ordered_json::array();
    for (const auto& e : s.entries) {
        ordered_json j;
        j["index"] = e.index;
        j["graph6"] = e.graph6;
        j["n"] = e.n;
        j["m"] = e.m;
        if (e.skipped) {
            j["skipped"] = *e.skipped;
        } else {
            j["value"] = e.value;
            j["exact"] = e.exact;
            j["ratio"] = e.ratio ? ordered_json(e.ratio->to_double()) : ordered_json();
        }
        entries.push_back(std::move(j));
    }
    doc["entries"] = std::move(entries);
    return doc.dump();
}

} // namespace inmatch
