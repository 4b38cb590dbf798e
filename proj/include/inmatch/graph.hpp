#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace inmatch {

using vertex_id = std::uint32_t;

inline constexpr vertex_id no_vertex = std::numeric_limits<vertex_id>::max();

/// Undirected edge kept in canonical order (a < b).
struct edge {
    vertex_id a = 0;
    vertex_id b = 0;

    constexpr edge() = default;
    // Accepts endpoints in either order; a self-loop is rejected by the caller
    // (build_graph), not here, so that invalid input can still be described.
    constexpr edge(vertex_id u, vertex_id v) : a(u < v ? u : v), b(u < v ? v : u) {}

    friend constexpr auto operator<=>(const edge&, const edge&) = default;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Neighbour lists are sorted ascending and symmetric; there are no loops and
/// no parallel edges. Construct through build_graph().
class graph {
public:
    graph() = default;

    std::size_t order() const noexcept { return offsets_.size() - 1; }
    std::size_t size() const noexcept { return targets_.size() / 2; }

    std::span<const vertex_id> neighbors(vertex_id v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(vertex_id v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const noexcept;

    bool adjacent(vertex_id u, vertex_id v) const;
    bool has_edge(const edge& e) const { return adjacent(e.a, e.b); }

    /// All edges in canonical (lexicographic) order.
    std::vector<edge> edges() const;

    /// Checks symmetry, sortedness, loop-freeness and the cached size.
    bool well_formed() const;

    friend bool operator==(const graph&, const graph&) = default;

private:
    friend graph build_graph(std::size_t n, std::span<const std::pair<vertex_id, vertex_id>> pairs);

    std::vector<std::size_t> offsets_{0};
    std::vector<vertex_id> targets_;
};

/// Builds a canonical graph; duplicate pairs collapse, (v, v) is rejected.
graph build_graph(std::size_t n, std::span<const std::pair<vertex_id, vertex_id>> pairs);
graph build_graph(std::size_t n, std::span<const edge> edges);

/// Connected components, each sorted, ordered by their smallest vertex.
std::vector<std::vector<vertex_id>> components(const graph& g);

bool is_connected(const graph& g);

/// Hop distance, or nullopt when v is unreachable from u.
std::optional<std::size_t> distance(const graph& g, vertex_id u, vertex_id v);

/// Breadth-first distances from a set of sources; unreachable vertices get
/// `unreachable`. Stops expanding past `limit` hops.
inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();
std::vector<std::size_t> bfs_distances(const graph& g, std::span<const vertex_id> sources,
                                       std::size_t limit = unreachable);

/// Two edges are independent when they share no endpoint and no edge of g
/// joins an endpoint of one to an endpoint of the other.
bool edges_independent(const graph& g, const edge& e, const edge& f);

/// Induced subgraph with dense re-indexing.
struct subgraph {
    graph g;
    std::vector<vertex_id> new_to_old;
    std::vector<vertex_id> old_to_new; ///< no_vertex for vertices not kept
};

/// `keep` must be sorted ascending and duplicate-free.
subgraph induced_subgraph(const graph& g, std::span<const vertex_id> keep);

struct ball_removal {
    graph remainder;
    std::vector<vertex_id> removed;    ///< sorted, ids of the input graph
    std::vector<vertex_id> new_to_old; ///< remainder id -> input id
    std::vector<vertex_id> old_to_new; ///< input id -> remainder id or no_vertex
};

/// Closed neighbourhood of all marked endpoints, sorted.
std::vector<vertex_id> closed_ball(const graph& g, std::span<const edge> marked);

/// Deletes every vertex at distance at most one from a marked edge.
ball_removal remove_closed_ball(const graph& g, std::span<const edge> marked);

std::size_t isolated_count(const graph& g);

/// Applies the permutation perm (old id -> new id).
graph relabel(const graph& g, std::span<const vertex_id> perm);

} // namespace inmatch
