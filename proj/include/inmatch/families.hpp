#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "inmatch/graph.hpp"

namespace inmatch {

/// Part sizes of a blown-up 5-cycle, listed around the cycle.
struct blown_cycle_spec {
    std::array<std::size_t, 5> sizes{};
};

/// Replaces vertex t of a 5-cycle by an independent set of sizes[t] vertices
/// and joins consecutive parts completely. Parts occupy consecutive id ranges
/// in cycle order.
graph blown_c5(const blown_cycle_spec& spec);

graph c5_squared();        ///< sizes 2,2,2,2,2
graph k33_plus();          ///< sizes 1,1,1,2,2
graph h_graph();           ///< sizes 1,1,1,3,3; vertex 1 is its only degree-2 vertex

/// Triangle with two pendant vertices on every corner. Vertices 0..2 form the
/// triangle; 3+2t and 4+2t hang off corner t.
graph triangle_pendants();

/// Two copies of h_graph() glued at their degree-2 vertices. The glued vertex
/// keeps id 1; the second copy's other vertices follow the first copy's.
graph double_h();

/// Id of the gluing vertex in double_h().
inline constexpr vertex_id double_h_glue_vertex = 1;

/// Seeded random graph with maximum degree at most 4.
///
/// All vertex pairs are shuffled; a pair becomes an edge when both endpoints
/// still have degree below 4 and a coin with bias `density` comes up heads.
/// Output depends only on (n, density, seed).
graph random_max_deg4(std::size_t n, double density, std::uint64_t seed);

/// Exact C5^2 test via the false-twin quotient.
bool is_c5_squared(const graph& g);

} // namespace inmatch
