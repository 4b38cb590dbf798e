#pragma once

#include <string>
#include <string_view>

#include "inmatch/bounds.hpp"
#include "inmatch/graph.hpp"
#include "inmatch/matching.hpp"
#include "inmatch/reduction.hpp"
#include "inmatch/scan.hpp"

namespace inmatch {

/// Largest order the 4-byte graph6 header can carry.
inline constexpr std::size_t graph6_max_order = 258047;

/// Decodes one graph6 line. A single trailing newline is tolerated; the
/// optional ">>graph6<<" prefix and the 8-byte size header are not.
graph parse_graph6(std::string_view text);

std::string encode_graph6(const graph& g);

/// Plain edge list: first non-comment line "n m", then m lines "u v" with
/// 0-based ids. '#' starts a comment that runs to the end of the line.
graph parse_edge_list(std::string_view text);

std::string encode_edge_list(const graph& g);

/// JSON report with keys in a fixed order:
/// n, m, isolated, c5sq_components, matching_size, guarantee_ok,
/// ratio_m_over_20_ok, conjecture_ratio, matching, trace.
std::string encode_report(const bound_report& r, const induced_matching& m, const reduction_trace& t);

std::string encode_scan_summary(const scan_summary& s);

} // namespace inmatch
