#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "inmatch/bounds.hpp"
#include "inmatch/graph.hpp"
#include "inmatch/matching.hpp"

namespace inmatch {

struct scan_options {
    std::size_t exact_limit = 24; ///< largest order solved exactly
    std::size_t node_budget = default_node_budget;
    unsigned threads = 1;
};

struct scan_entry {
    std::size_t index = 0;
    std::string graph6;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t value = 0;       ///< nu_s when exact, otherwise a lower estimate
    bool exact = false;
    std::optional<rational> ratio; ///< 17 * value / m
    std::optional<std::string> skipped;
};

struct scan_summary {
    std::vector<scan_entry> entries;
    std::size_t scanned = 0;
    std::size_t skipped = 0;
    std::optional<rational> min_ratio;
    std::optional<std::size_t> argmin_index;
    std::string argmin_graph6;
    bool argmin_exact = false;
    /// Set only by an exact value with 17 * nu_s < m.
    bool counterexample = false;
};

/// Searches sources for small values of 17 nu_s / m. Graphs with a vertex of
/// degree above 4, a C5^2 component, or no edges are skipped with a reason.
/// Values from the bounded engine are lower estimates and never count as
/// counterexamples. Ties on the minimum go to the smaller graph6 string.
scan_summary conjecture_scan(std::span<const graph> sources, bool use_exact,
                             const scan_options& opts = {});

} // namespace inmatch
