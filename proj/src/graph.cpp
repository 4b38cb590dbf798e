#include "inmatch/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "inmatch/error.hpp"

namespace inmatch {

const char* to_string(errc code) noexcept {
    switch (code) {
    case errc::self_loop: return "SelfLoop";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::not_an_edge: return "NotAnEdge";
    case errc::malformed_header: return "MalformedHeader";
    case errc::truncated_body: return "TruncatedBody";
    case errc::trailing_garbage: return "TrailingGarbage";
    case errc::byte_out_of_range: return "ByteOutOfRange";
    case errc::graph_too_large: return "GraphTooLarge";
    case errc::bad_token: return "BadToken";
    case errc::count_mismatch: return "CountMismatch";
    case errc::inconsistent_inputs: return "InconsistentInputs";
    case errc::bad_spec: return "BadSpec";
    case errc::budget_exhausted: return "BudgetExhausted";
    case errc::theorem_violation: return "TheoremViolation";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::max_degree_exceeded: return "MaxDegreeExceeded";
    }
    return "Unknown";
}

namespace {

void check_vertex(const graph& g, vertex_id v) {
    if (v >= g.order())
        throw error(errc::vertex_out_of_range,
                    "vertex " + std::to_string(v) + " out of range for order " +
                        std::to_string(g.order()));
}

void check_edge(const graph& g, const edge& e) {
    check_vertex(g, e.a);
    check_vertex(g, e.b);
    if (!g.has_edge(e))
        throw error(errc::not_an_edge,
                    "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ") is not an edge");
}

} // namespace

std::size_t graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (std::size_t v = 0; v + 1 < offsets_.size(); ++v)
        best = std::max(best, offsets_[v + 1] - offsets_[v]);
    return best;
}

bool graph::adjacent(vertex_id u, vertex_id v) const {
    if (u >= order() || v >= order())
        return false;
    auto nu = neighbors(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<edge> graph::edges() const {
    std::vector<edge> out;
    out.reserve(size());
    for (vertex_id u = 0; u < order(); ++u)
        for (vertex_id v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool graph::well_formed() const {
    std::size_t degree_sum = 0;
    for (vertex_id u = 0; u < order(); ++u) {
        auto nu = neighbors(u);
        degree_sum += nu.size();
        for (std::size_t i = 0; i < nu.size(); ++i) {
            if (nu[i] == u || nu[i] >= order())
                return false;
            if (i > 0 && nu[i - 1] >= nu[i])
                return false;
            if (!adjacent(nu[i], u))
                return false;
        }
    }
    return degree_sum == targets_.size() && degree_sum % 2 == 0;
}

graph build_graph(std::size_t n, std::span<const std::pair<vertex_id, vertex_id>> pairs) {
    if (n >= no_vertex)
        throw error(errc::graph_too_large, "order " + std::to_string(n) + " too large");
    std::vector<edge> canon;
    canon.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u >= n || v >= n)
            throw error(errc::vertex_out_of_range,
                        "vertex " + std::to_string(std::max(u, v)) + " out of range for order " +
                            std::to_string(n));
        if (u == v)
            throw error(errc::self_loop, "self-loop at vertex " + std::to_string(u));
        canon.emplace_back(u, v);
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    graph g;
    g.offsets_.assign(n + 1, 0);
    for (const auto& e : canon) {
        ++g.offsets_[e.a + 1];
        ++g.offsets_[e.b + 1];
    }
    for (std::size_t v = 0; v < n; ++v)
        g.offsets_[v + 1] += g.offsets_[v];
    g.targets_.resize(2 * canon.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges arrive sorted by (a, b), so every list fills ascending: partners
    // below v show up first (ordered by a), then the run of partners above v.
    for (const auto& e : canon) {
        g.targets_[fill[e.a]++] = e.b;
        g.targets_[fill[e.b]++] = e.a;
    }
    return g;
}

graph build_graph(std::size_t n, std::span<const edge> edges) {
    std::vector<std::pair<vertex_id, vertex_id>> pairs;
    pairs.reserve(edges.size());
    for (const auto& e : edges)
        pairs.emplace_back(e.a, e.b);
    return build_graph(n, pairs);
}

std::vector<std::vector<vertex_id>> components(const graph& g) {
    std::vector<std::vector<vertex_id>> out;
    std::vector<bool> seen(g.order(), false);
    std::vector<vertex_id> stack;
    for (vertex_id root = 0; root < g.order(); ++root) {
        if (seen[root])
            continue;
        std::vector<vertex_id> comp;
        seen[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            vertex_id v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (vertex_id w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const graph& g) {
    return components(g).size() <= 1;
}

std::vector<std::size_t> bfs_distances(const graph& g, std::span<const vertex_id> sources,
                                       std::size_t limit) {
    std::vector<std::size_t> dist(g.order(), unreachable);
    std::deque<vertex_id> queue;
    for (vertex_id s : sources) {
        check_vertex(g, s);
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        vertex_id v = queue.front();
        queue.pop_front();
        if (dist[v] >= limit)
            continue;
        for (vertex_id w : g.neighbors(v))
            if (dist[w] == unreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::optional<std::size_t> distance(const graph& g, vertex_id u, vertex_id v) {
    check_vertex(g, u);
    check_vertex(g, v);
    const vertex_id src[] = {u};
    auto d = bfs_distances(g, src)[v];
    if (d == unreachable)
        return std::nullopt;
    return d;
}

bool edges_independent(const graph& g, const edge& e, const edge& f) {
    check_edge(g, e);
    check_edge(g, f);
    const vertex_id ends_e[] = {e.a, e.b};
    const vertex_id ends_f[] = {f.a, f.b};
    for (vertex_id x : ends_e)
        for (vertex_id y : ends_f)
            if (x == y || g.adjacent(x, y))
                return false;
    return true;
}

subgraph induced_subgraph(const graph& g, std::span<const vertex_id> keep) {
    subgraph out;
    out.new_to_old.assign(keep.begin(), keep.end());
    out.old_to_new.assign(g.order(), no_vertex);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(g, keep[i]);
        out.old_to_new[keep[i]] = static_cast<vertex_id>(i);
    }
    std::vector<edge> kept_edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (vertex_id w : g.neighbors(keep[i])) {
            vertex_id j = out.old_to_new[w];
            if (j != no_vertex && i < j)
                kept_edges.emplace_back(static_cast<vertex_id>(i), j);
        }
    out.g = build_graph(keep.size(), kept_edges);
    return out;
}

std::vector<vertex_id> closed_ball(const graph& g, std::span<const edge> marked) {
    std::vector<vertex_id> ball;
    for (const auto& e : marked) {
        check_edge(g, e);
        for (vertex_id x : {e.a, e.b}) {
            ball.push_back(x);
            for (vertex_id w : g.neighbors(x))
                ball.push_back(w);
        }
    }
    std::sort(ball.begin(), ball.end());
    ball.erase(std::unique(ball.begin(), ball.end()), ball.end());
    return ball;
}

ball_removal remove_closed_ball(const graph& g, std::span<const edge> marked) {
    if (marked.empty())
        throw error(errc::precondition_violated, "no marked edges");
    ball_removal out;
    out.removed = closed_ball(g, marked);
    std::vector<vertex_id> keep;
    keep.reserve(g.order() - out.removed.size());
    auto it = out.removed.begin();
    for (vertex_id v = 0; v < g.order(); ++v) {
        if (it != out.removed.end() && *it == v) {
            ++it;
            continue;
        }
        keep.push_back(v);
    }
    auto sub = induced_subgraph(g, keep);
    out.remainder = std::move(sub.g);
    out.new_to_old = std::move(sub.new_to_old);
    out.old_to_new = std::move(sub.old_to_new);
    return out;
}

std::size_t isolated_count(const graph& g) {
    std::size_t count = 0;
    for (vertex_id v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            ++count;
    return count;
}

graph relabel(const graph& g, std::span<const vertex_id> perm) {
    if (perm.size() != g.order())
        throw error(errc::precondition_violated, "permutation length differs from graph order");
    std::vector<bool> hit(g.order(), false);
    for (vertex_id p : perm) {
        if (p >= g.order() || hit[p])
            throw error(errc::precondition_violated, "not a permutation");
        hit[p] = true;
    }
    std::vector<edge> mapped;
    for (const auto& e : g.edges())
        mapped.emplace_back(perm[e.a], perm[e.b]);
    return build_graph(g.order(), mapped);
}

} // namespace inmatch
