#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>

namespace oracle {

matrix adjacency(const inmatch::graph& g) {
    matrix adj(g.order(), std::vector<bool>(g.order(), false));
    for (inmatch::vertex_id u = 0; u < g.order(); ++u)
        for (auto v : g.neighbors(u))
            adj[u][v] = true;
    return adj;
}

pair_list edge_pairs(const matrix& adj) {
    pair_list out;
    for (unsigned i = 0; i < adj.size(); ++i)
        for (unsigned j = i + 1; j < adj.size(); ++j)
            if (adj[i][j])
                out.emplace_back(i, j);
    return out;
}

bool independent(const matrix& adj, std::pair<unsigned, unsigned> e, std::pair<unsigned, unsigned> f) {
    const unsigned a[2] = {e.first, e.second};
    const unsigned b[2] = {f.first, f.second};
    for (unsigned x : a)
        for (unsigned y : b)
            if (x == y || adj[x][y])
                return false;
    return true;
}

namespace {

void grow(const matrix& adj, const pair_list& edges, std::size_t next, pair_list& chosen, std::size_t limit,
          std::size_t& best) {
    best = std::max(best, chosen.size());
    if (chosen.size() == limit)
        return;
    for (std::size_t i = next; i < edges.size(); ++i) {
        bool ok = std::all_of(chosen.begin(), chosen.end(),
                              [&](const auto& c) { return independent(adj, c, edges[i]); });
        if (!ok)
            continue;
        chosen.push_back(edges[i]);
        grow(adj, edges, i + 1, chosen, limit, best);
        chosen.pop_back();
    }
}

} // namespace

std::size_t naive_max_induced_matching(const inmatch::graph& g) {
    auto adj = adjacency(g);
    auto edges = edge_pairs(adj);
    pair_list chosen;
    std::size_t best = 0;
    grow(adj, edges, 0, chosen, edges.size(), best);
    return best;
}

bool has_independent_pair(const inmatch::graph& g) {
    auto adj = adjacency(g);
    auto edges = edge_pairs(adj);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (independent(adj, edges[i], edges[j]))
                return true;
    return false;
}

std::vector<unsigned> closed_ball(const matrix& adj, const pair_list& marked) {
    std::vector<unsigned> out;
    for (unsigned v = 0; v < adj.size(); ++v) {
        bool near = false;
        for (const auto& [a, b] : marked)
            near = near || v == a || v == b || adj[v][a] || adj[v][b];
        if (near)
            out.push_back(v);
    }
    return out;
}

std::vector<std::vector<std::size_t>> all_distances(const matrix& adj) {
    const std::size_t n = adj.size();
    const std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (adj[i][j])
                d[i][j] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] != inf && d[k][j] != inf)
                    d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inmatch::graph cycle_square(std::size_t n) {
    std::vector<inmatch::edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t step : {1U, 2U})
            edges.emplace_back(static_cast<inmatch::vertex_id>(i), static_cast<inmatch::vertex_id>((i + step) % n));
    return inmatch::build_graph(n, edges);
}

inmatch::graph path(std::size_t n) {
    std::vector<inmatch::edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(static_cast<inmatch::vertex_id>(i), static_cast<inmatch::vertex_id>(i + 1));
    return inmatch::build_graph(n, edges);
}

inmatch::graph cycle(std::size_t n) {
    std::vector<inmatch::edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<inmatch::vertex_id>(i), static_cast<inmatch::vertex_id>((i + 1) % n));
    return inmatch::build_graph(n, edges);
}

std::vector<inmatch::vertex_id> permutation(std::size_t n, unsigned seed) {
    std::vector<inmatch::vertex_id> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace oracle
