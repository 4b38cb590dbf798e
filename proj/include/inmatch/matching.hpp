#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "inmatch/graph.hpp"

namespace inmatch {

/// Edges claimed pairwise independent in a graph of order `graph_order`.
/// Edges are kept sorted.
struct induced_matching {
    std::vector<edge> edges;
    std::size_t graph_order = 0;

    std::size_t size() const noexcept { return edges.size(); }
};

/// Outcome of an induced-matching check, with a witness on failure.
struct matching_check {
    bool valid = true;
    std::optional<edge> non_edge;                     ///< listed edge missing from g
    std::optional<std::pair<edge, edge>> conflict;    ///< dependent pair
    std::optional<edge> joining;                      ///< edge of g joining the pair, if not sharing a vertex
    std::size_t duplicates = 0;

    std::string describe() const;
};

matching_check check_induced_matching(const graph& g, std::span<const edge> edges);

bool is_induced_matching(const graph& g, std::span<const edge> edges);

/// Takes the lexicographically least edge compatible with everything chosen
/// so far until none is left; the result is maximal.
induced_matching greedy_maximal_induced_matching(const graph& g);

inline constexpr std::size_t default_node_budget = 10'000'000;

/// Maximum induced matching by branch and bound on edges.
///
/// Each node picks the remaining edge with the highest-degree endpoint
/// (lexicographically least among ties) and branches on taking it, which
/// deletes its closed ball, or forbidding it. Subtrees are pruned against the
/// incumbent with a star-cover bound. Throws budget_exhausted once more than
/// `node_budget` nodes have been expanded.
induced_matching exact_max_induced_matching(const graph& g,
                                            std::size_t node_budget = default_node_budget);

/// Same search, also reporting how many nodes it expanded.
struct exact_result {
    induced_matching matching;
    std::size_t nodes = 0;
};
exact_result exact_max_induced_matching_stats(const graph& g,
                                              std::size_t node_budget = default_node_budget);

} // namespace inmatch
