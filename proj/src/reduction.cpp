#include "inmatch/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "inmatch/families.hpp"

namespace inmatch {

const char* to_string(step_kind kind) noexcept {
    switch (kind) {
    case step_kind::reduction: return "reduction";
    case step_kind::exact_leaf: return "exact";
    case step_kind::c5sq_leaf: return "c5sq";
    case step_kind::isolated_leaf: return "isolated";
    }
    return "unknown";
}

const char* to_string(trace_condition c) noexcept {
    switch (c) {
    case trace_condition::partition: return "partition";
    case trace_condition::budget: return "budget";
    case trace_condition::matching_union: return "matching-union";
    case trace_condition::induced: return "induced";
    case trace_condition::guarantee: return "guarantee";
    }
    return "unknown";
}

std::size_t reduction_trace::contributed_total() const noexcept {
    std::size_t total = 0;
    for (const auto& s : steps)
        total += s.contributed.size();
    return total;
}

std::size_t reduction_trace::fallback_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [](const trace_step& s) { return s.fallback; }));
}

namespace {

// Scores |S| + i(G - S) for candidate marks, reusing stamp arrays so that a
// candidate costs time proportional to the ball's second neighbourhood.
class budget_scorer {
public:
    explicit budget_scorer(const graph& c) : c_(c), in_ball_(c.order(), 0), seen_(c.order(), 0) {}

    std::size_t score(std::initializer_list<edge> marked) {
        ++stamp_;
        ball_.clear();
        for (const auto& e : marked)
            for (vertex_id x : {e.a, e.b}) {
                add(x);
                for (vertex_id w : c_.neighbors(x))
                    add(w);
            }
        std::size_t isolated = 0;
        for (vertex_id s : ball_)
            for (vertex_id w : c_.neighbors(s)) {
                if (in_ball_[w] == stamp_ || seen_[w] == stamp_)
                    continue;
                seen_[w] = stamp_;
                auto nw = c_.neighbors(w);
                if (std::all_of(nw.begin(), nw.end(), [&](vertex_id y) { return in_ball_[y] == stamp_; }))
                    ++isolated;
            }
        return ball_.size() + isolated;
    }

private:
    void add(vertex_id v) {
        if (in_ball_[v] != stamp_) {
            in_ball_[v] = stamp_;
            ball_.push_back(v);
        }
    }

    const graph& c_;
    std::vector<std::size_t> in_ball_;
    std::vector<std::size_t> seen_;
    std::vector<vertex_id> ball_;
    std::size_t stamp_ = 0;
};

void check_search_preconditions(const graph& c) {
    if (c.order() < 2)
        throw error(errc::precondition_violated, "component has fewer than two vertices");
    if (c.max_degree() > 4)
        throw error(errc::precondition_violated, "maximum degree exceeds 4");
    if (!is_connected(c))
        throw error(errc::precondition_violated, "component is disconnected");
    if (is_c5_squared(c))
        throw error(errc::precondition_violated, "component is C5^2");
}

} // namespace

reduction evaluate_marks(const graph& c, std::vector<edge> marked) {
    std::sort(marked.begin(), marked.end());
    reduction r;
    r.ball = closed_ball(c, marked);
    std::vector<bool> in_ball(c.order(), false);
    for (vertex_id v : r.ball)
        in_ball[v] = true;
    for (vertex_id w = 0; w < c.order(); ++w) {
        if (in_ball[w])
            continue;
        auto nw = c.neighbors(w);
        if (std::all_of(nw.begin(), nw.end(), [&](vertex_id y) { return in_ball[y]; }))
            ++r.isolated_after;
    }
    r.marked = std::move(marked);
    r.budget_lhs = r.ball.size() + r.isolated_after;
    r.budget_rhs = 9 * r.marked.size();
    return r;
}

reduction find_reduction(const graph& c, const search_options& opts) {
    check_search_preconditions(c);

    std::vector<edge> order = c.edges();
    auto low = [&](const edge& e) { return std::min(c.degree(e.a), c.degree(e.b)); };
    std::stable_sort(order.begin(), order.end(),
                     [&](const edge& x, const edge& y) { return low(x) < low(y); });

    if (opts.max_marks == 0)
        throw theorem_violation(c);

    budget_scorer scorer(c);
    for (const auto& e : order)
        if (scorer.score({e}) <= 9)
            return evaluate_marks(c, {e});

    if (opts.max_marks < 2)
        throw theorem_violation(c);

    // Pairs (order[i], order[j]) with i < j. Independence holds exactly when
    // both endpoints of the second edge are at distance >= 2 from the first.
    const std::size_t cap = opts.pair_distance_cap;
    auto pair_pass = [&](bool near) -> std::optional<reduction> {
        for (std::size_t i = 0; i < order.size(); ++i) {
            const vertex_id src[] = {order[i].a, order[i].b};
            auto dist = bfs_distances(c, src, cap);
            for (std::size_t j = i + 1; j < order.size(); ++j) {
                std::size_t d = std::min(dist[order[j].a], dist[order[j].b]);
                if (d < 2 || (d <= cap) != near)
                    continue;
                if (scorer.score({order[i], order[j]}) <= 18)
                    return evaluate_marks(c, {order[i], order[j]});
            }
        }
        return std::nullopt;
    };
    if (auto r = pair_pass(true))
        return *r;
    if (auto r = pair_pass(false))
        return *r;
    throw theorem_violation(c);
}

namespace {

struct pending_component {
    graph g;
    std::vector<vertex_id> to_input;
};

edge lift(const edge& e, const std::vector<vertex_id>& to_input) {
    return {to_input[e.a], to_input[e.b]};
}

std::vector<edge> lift_all(const std::vector<edge>& edges, const std::vector<vertex_id>& to_input) {
    std::vector<edge> out;
    out.reserve(edges.size());
    for (const auto& e : edges)
        out.push_back(lift(e, to_input));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

engine_result bounded_induced_matching(const graph& g, const engine_options& opts) {
    for (vertex_id v = 0; v < g.order(); ++v)
        if (g.degree(v) > 4)
            throw error(errc::max_degree_exceeded,
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));

    engine_result out;
    std::vector<pending_component> stack;
    auto push_components = [&](const graph& h, const std::vector<vertex_id>& h_to_input) {
        auto comps = components(h);
        for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
            auto sub = induced_subgraph(h, *it);
            std::vector<vertex_id> to_input(sub.new_to_old.size());
            for (std::size_t i = 0; i < to_input.size(); ++i)
                to_input[i] = h_to_input[sub.new_to_old[i]];
            stack.push_back({std::move(sub.g), std::move(to_input)});
        }
    };

    std::vector<vertex_id> identity(g.order());
    for (vertex_id v = 0; v < g.order(); ++v)
        identity[v] = v;
    push_components(g, identity);

    while (!stack.empty()) {
        pending_component pc = std::move(stack.back());
        stack.pop_back();
        const graph& c = pc.g;

        trace_step step;
        step.component = pc.to_input;

        auto solve_exactly = [&] {
            step.kind = step_kind::exact_leaf;
            step.contributed = lift_all(exact_max_induced_matching(c, opts.node_budget).edges, pc.to_input);
        };

        if (c.order() == 1) {
            step.kind = step_kind::isolated_leaf;
        } else if (is_c5_squared(c)) {
            step.kind = step_kind::c5sq_leaf;
            step.contributed = {lift(c.edges().front(), pc.to_input)};
        } else if (c.order() <= opts.exact_threshold) {
            solve_exactly();
        } else {
            std::optional<reduction> red;
            try {
                red = find_reduction(c, opts.search);
            } catch (const theorem_violation&) {
                if (!opts.fallback_exact)
                    throw;
                solve_exactly();
                step.fallback = true;
            }
            if (red) {
                auto removal = remove_closed_ball(c, red->marked);
                std::vector<vertex_id> rest_to_input(removal.new_to_old.size());
                for (std::size_t i = 0; i < rest_to_input.size(); ++i)
                    rest_to_input[i] = pc.to_input[removal.new_to_old[i]];

                for (const auto& comp : components(removal.remainder))
                    if (comp.size() == 10 && is_c5_squared(induced_subgraph(removal.remainder, comp).g))
                        throw std::logic_error("reduction left a C5^2 component");

                step.kind = step_kind::reduction;
                step.contributed = lift_all(red->marked, pc.to_input);
                reduction lifted = *red;
                lifted.marked = step.contributed;
                for (auto& v : lifted.ball)
                    v = pc.to_input[v];
                std::sort(lifted.ball.begin(), lifted.ball.end());
                step.red = std::move(lifted);
                push_components(removal.remainder, rest_to_input);
            }
        }
        for (const auto& e : step.contributed)
            out.matching.edges.push_back(e);
        out.trace.steps.push_back(std::move(step));
    }

    out.matching.graph_order = g.order();
    std::sort(out.matching.edges.begin(), out.matching.edges.end());
    out.report = make_bound_report(g, out.matching.size());
    return out;
}

trace_verdict verify_trace(const graph& g, const reduction_trace& t, const induced_matching& m) {
    auto fail = [](trace_condition c, std::string detail) {
        return trace_verdict{false, c, std::move(detail)};
    };
    const std::size_t n = g.order();

    // (a) balls and leaf components partition V(g).
    std::vector<std::size_t> cover(n, 0);
    for (std::size_t s = 0; s < t.steps.size(); ++s) {
        const auto& step = t.steps[s];
        const auto& comp = step.component;
        if (!std::is_sorted(comp.begin(), comp.end()) ||
            std::adjacent_find(comp.begin(), comp.end()) != comp.end() ||
            (!comp.empty() && comp.back() >= n))
            return fail(trace_condition::partition, "step " + std::to_string(s) + " has a malformed component");
        if ((step.kind == step_kind::reduction) != step.red.has_value())
            return fail(trace_condition::partition, "step " + std::to_string(s) + " kind/reduction mismatch");
        const auto& owned = step.red ? step.red->ball : comp;
        for (vertex_id v : owned) {
            if (v >= n || !std::binary_search(comp.begin(), comp.end(), v))
                return fail(trace_condition::partition,
                            "step " + std::to_string(s) + " removes a vertex outside its component");
            ++cover[v];
        }
    }
    for (vertex_id v = 0; v < n; ++v)
        if (cover[v] != 1)
            return fail(trace_condition::partition,
                        "vertex " + std::to_string(v) + " covered " + std::to_string(cover[v]) + " times");

    // (b) every reduction step is a genuine mark within budget.
    for (std::size_t s = 0; s < t.steps.size(); ++s) {
        const auto& step = t.steps[s];
        if (!step.red)
            continue;
        const auto& red = *step.red;
        const std::string where = "step " + std::to_string(s) + ": ";
        const auto& comp = step.component;
        auto in_comp = [&](vertex_id v) { return std::binary_search(comp.begin(), comp.end(), v); };
        if (red.k() < 1 || red.k() > 2)
            return fail(trace_condition::budget, where + "mark count outside {1,2}");
        for (const auto& e : red.marked)
            if (!g.has_edge(e) || !in_comp(e.a) || !in_comp(e.b))
                return fail(trace_condition::budget, where + "marked edge not in component");
        if (red.k() == 2 && !edges_independent(g, red.marked[0], red.marked[1]))
            return fail(trace_condition::budget, where + "marked edges not independent");

        std::vector<vertex_id> ball;
        for (vertex_id v : closed_ball(g, red.marked))
            if (in_comp(v))
                ball.push_back(v);
        if (ball != red.ball)
            return fail(trace_condition::budget, where + "ball is not the closed neighbourhood of the marks");
        std::size_t isolated = 0;
        for (vertex_id w : comp) {
            if (std::binary_search(ball.begin(), ball.end(), w))
                continue;
            auto nw = g.neighbors(w);
            bool alone = std::all_of(nw.begin(), nw.end(), [&](vertex_id y) {
                return !in_comp(y) || std::binary_search(ball.begin(), ball.end(), y);
            });
            if (alone)
                ++isolated;
        }
        if (isolated != red.isolated_after || red.budget_lhs != ball.size() + isolated ||
            red.budget_rhs != 9 * red.k())
            return fail(trace_condition::budget, where + "recorded budget disagrees with recomputation");
        if (red.budget_lhs > red.budget_rhs)
            return fail(trace_condition::budget, where + std::to_string(red.budget_lhs) + " > " +
                                                     std::to_string(red.budget_rhs));
    }

    // (c) the matching is exactly what the steps contributed.
    if (m.graph_order != n)
        return fail(trace_condition::matching_union, "matching computed against a different order");
    std::vector<edge> uni;
    for (std::size_t s = 0; s < t.steps.size(); ++s) {
        const auto& step = t.steps[s];
        const auto& comp = step.component;
        if (step.red && step.contributed != step.red->marked)
            return fail(trace_condition::matching_union,
                        "step " + std::to_string(s) + " contributes something other than its marks");
        if (step.kind == step_kind::isolated_leaf && (comp.size() != 1 || !step.contributed.empty()))
            return fail(trace_condition::matching_union, "step " + std::to_string(s) + " bad isolated leaf");
        if (step.kind == step_kind::c5sq_leaf && step.contributed.size() != 1)
            return fail(trace_condition::matching_union, "step " + std::to_string(s) + " bad C5^2 leaf");
        for (const auto& e : step.contributed) {
            if (!std::binary_search(comp.begin(), comp.end(), e.a) ||
                !std::binary_search(comp.begin(), comp.end(), e.b))
                return fail(trace_condition::matching_union,
                            "step " + std::to_string(s) + " contributes an edge outside its component");
            uni.push_back(e);
        }
    }
    std::sort(uni.begin(), uni.end());
    std::vector<edge> listed = m.edges;
    std::sort(listed.begin(), listed.end());
    if (uni != listed)
        return fail(trace_condition::matching_union, "matching differs from the union of contributions");

    // (d) independence in g itself.
    if (auto check = check_induced_matching(g, listed); !check.valid)
        return fail(trace_condition::induced, check.describe());

    // (e) the bound.
    auto r = make_bound_report(g, listed.size());
    if (!r.guarantee_ok)
        return fail(trace_condition::guarantee,
                    "9*" + std::to_string(listed.size()) + " < " + std::to_string(r.theorem_rhs_numerator()));
    return {};
}

} // namespace inmatch
