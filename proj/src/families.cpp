#include "inmatch/families.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "inmatch/error.hpp"

namespace inmatch {

graph blown_c5(const blown_cycle_spec& spec) {
    std::array<std::size_t, 6> start{};
    for (std::size_t t = 0; t < 5; ++t) {
        if (spec.sizes[t] == 0)
            throw error(errc::bad_spec, "part " + std::to_string(t) + " of a blown 5-cycle is empty");
        start[t + 1] = start[t] + spec.sizes[t];
    }
    std::vector<edge> edges;
    for (std::size_t t = 0; t < 5; ++t) {
        std::size_t next = (t + 1) % 5;
        for (std::size_t i = start[t]; i < start[t + 1]; ++i)
            for (std::size_t j = start[next]; j < start[next + 1]; ++j)
                edges.emplace_back(static_cast<vertex_id>(i), static_cast<vertex_id>(j));
    }
    return build_graph(start[5], edges);
}

graph c5_squared() { return blown_c5({{2, 2, 2, 2, 2}}); }
graph k33_plus() { return blown_c5({{1, 1, 1, 2, 2}}); }
graph h_graph() { return blown_c5({{1, 1, 1, 3, 3}}); }

graph triangle_pendants() {
    std::vector<edge> edges = {{0, 1}, {0, 2}, {1, 2}};
    for (vertex_id t = 0; t < 3; ++t) {
        edges.emplace_back(t, 3 + 2 * t);
        edges.emplace_back(t, 4 + 2 * t);
    }
    return build_graph(9, edges);
}

graph double_h() {
    const graph h = h_graph();
    const std::size_t n = h.order();
    // Copy two: glue vertex maps onto the glue vertex, the rest are shifted
    // past copy one and closed up over the gap the glue vertex leaves.
    auto second = [&](vertex_id v) -> vertex_id {
        if (v == double_h_glue_vertex)
            return double_h_glue_vertex;
        return static_cast<vertex_id>(n + (v < double_h_glue_vertex ? v : v - 1));
    };
    std::vector<edge> edges = h.edges();
    for (const auto& e : h.edges())
        edges.emplace_back(second(e.a), second(e.b));
    return build_graph(2 * n - 1, edges);
}

namespace {

// Unbiased integer in [0, bound) from the raw 64-bit stream. The standard
// distributions are implementation-defined, which would break reproducibility
// across toolchains.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

graph random_max_deg4(std::size_t n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<vertex_id, vertex_id>> pairs;
    pairs.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (vertex_id u = 0; u < n; ++u)
        for (vertex_id v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    for (std::size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[draw_below(rng, i)]);

    std::vector<std::uint8_t> degree(n, 0);
    std::vector<std::pair<vertex_id, vertex_id>> chosen;
    for (auto [u, v] : pairs) {
        if (degree[u] >= 4 || degree[v] >= 4)
            continue;
        if (draw_unit(rng) >= density)
            continue;
        ++degree[u];
        ++degree[v];
        chosen.emplace_back(u, v);
    }
    return build_graph(n, chosen);
}

bool is_c5_squared(const graph& g) {
    if (g.order() != 10 || g.size() != 20)
        return false;
    for (vertex_id v = 0; v < 10; ++v)
        if (g.degree(v) != 4)
            return false;
    if (!is_connected(g))
        return false;

    // False twins: non-adjacent with identical neighbourhoods.
    std::array<int, 10> cls;
    cls.fill(-1);
    int classes = 0;
    for (vertex_id v = 0; v < 10; ++v) {
        if (cls[v] != -1)
            continue;
        cls[v] = classes;
        for (vertex_id w = v + 1; w < 10; ++w) {
            if (cls[w] != -1 || g.adjacent(v, w))
                continue;
            auto nv = g.neighbors(v);
            auto nw = g.neighbors(w);
            if (std::equal(nv.begin(), nv.end(), nw.begin(), nw.end()))
                cls[w] = classes;
        }
        ++classes;
    }
    if (classes != 5)
        return false;
    std::array<int, 5> count{};
    for (int c : cls)
        ++count[static_cast<std::size_t>(c)];
    if (std::any_of(count.begin(), count.end(), [](int c) { return c != 2; }))
        return false;

    // Quotient: every class must see exactly two other classes, forming one 5-cycle.
    std::array<std::array<bool, 5>, 5> quotient{};
    for (const auto& e : g.edges()) {
        auto a = static_cast<std::size_t>(cls[e.a]);
        auto b = static_cast<std::size_t>(cls[e.b]);
        if (a == b)
            return false;
        quotient[a][b] = quotient[b][a] = true;
    }
    for (const auto& row : quotient)
        if (std::count(row.begin(), row.end(), true) != 2)
            return false;
    // A 2-regular simple graph on five vertices is C5.
    return true;
}

} // namespace inmatch
