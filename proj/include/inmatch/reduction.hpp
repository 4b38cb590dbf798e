#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "inmatch/bounds.hpp"
#include "inmatch/error.hpp"
#include "inmatch/graph.hpp"
#include "inmatch/matching.hpp"

namespace inmatch {

/// One marking step: 1 or 2 pairwise independent marked edges, the closed
/// ball S they remove, and the isolated vertices the removal leaves behind.
struct reduction {
    std::vector<edge> marked;
    std::vector<vertex_id> ball;
    std::size_t isolated_after = 0;
    std::size_t budget_lhs = 0; ///< |S| + isolated_after
    std::size_t budget_rhs = 0; ///< 9k

    std::size_t k() const noexcept { return marked.size(); }
    bool within_budget() const noexcept { return budget_lhs <= budget_rhs; }
};

/// Scores a candidate mark set on c without accepting or rejecting it.
reduction evaluate_marks(const graph& c, std::vector<edge> marked);

/// Raised when no mark set within budget exists. For a connected graph with
/// maximum degree 4 that is not C5^2 this contradicts the bound the engine
/// relies on, so it signals a bug or a bad input.
class theorem_violation : public error {
public:
    explicit theorem_violation(graph component)
        : error(errc::theorem_violation,
                "no reduction within budget on a component of order " +
                    std::to_string(component.order())),
          component_(std::move(component)) {}

    const graph& component() const noexcept { return component_; }

private:
    graph component_;
};

struct search_options {
    std::size_t pair_distance_cap = 6;
    std::size_t max_marks = 2; ///< 1 tries single edges only, 0 disables the search
};

/// Budget-checked search for a reduction on a connected component.
///
/// Phase 1 tries single edges ordered by their smaller endpoint degree, then
/// canonically, and accepts the first with |S| + i <= 9. Phase 2 tries
/// independent pairs within `pair_distance_cap` hops of each other against
/// |S| + i <= 18; phase 3 tries the remaining independent pairs.
reduction find_reduction(const graph& c, const search_options& opts = {});

enum class step_kind { reduction, exact_leaf, c5sq_leaf, isolated_leaf };

const char* to_string(step_kind kind) noexcept;

/// One step of a run, stated in ids of the input graph. `component` lists the
/// component's vertices in ascending order, which is also its local
/// re-indexing (local id i is component[i]).
struct trace_step {
    step_kind kind = step_kind::isolated_leaf;
    std::vector<vertex_id> component;
    std::optional<reduction> red; ///< set iff kind == reduction
    std::vector<edge> contributed;
    bool fallback = false;        ///< exact leaf standing in for a failed search
};

struct reduction_trace {
    std::vector<trace_step> steps;

    std::size_t contributed_total() const noexcept;
    std::size_t fallback_count() const noexcept;
};

struct engine_options {
    std::size_t exact_threshold = 18;
    bool fallback_exact = false;
    std::size_t node_budget = default_node_budget;
    search_options search;
};

struct engine_result {
    induced_matching matching;
    reduction_trace trace;
    bound_report report;
};

/// Induced matching M with 9|M| >= n - i - n5 for any graph of maximum degree
/// at most 4, together with a trace that certifies the count.
engine_result bounded_induced_matching(const graph& g, const engine_options& opts = {});

enum class trace_condition { partition, budget, matching_union, induced, guarantee };

const char* to_string(trace_condition c) noexcept;

struct trace_verdict {
    bool ok = true;
    std::optional<trace_condition> failed;
    std::string detail;

    explicit operator bool() const noexcept { return ok; }
};

/// Independent audit of a run; reports the first failed condition.
trace_verdict verify_trace(const graph& g, const reduction_trace& t, const induced_matching& m);

} // namespace inmatch
