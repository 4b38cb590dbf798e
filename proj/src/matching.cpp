#include "inmatch/matching.hpp"

#include <algorithm>
#include <cstdint>

#include "inmatch/error.hpp"

namespace inmatch {

namespace {

std::string show(const edge& e) {
    return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

} // namespace

std::string matching_check::describe() const {
    if (valid)
        return "valid induced matching";
    if (non_edge)
        return show(*non_edge) + " is not an edge of the graph";
    if (duplicates > 0)
        return "edge listed more than once";
    if (conflict) {
        std::string s = show(conflict->first) + " and " + show(conflict->second);
        if (joining)
            return s + " are joined by " + show(*joining);
        return s + " share a vertex";
    }
    return "invalid";
}

matching_check check_induced_matching(const graph& g, std::span<const edge> edges) {
    matching_check out;
    for (const auto& e : edges)
        if (e.a == e.b || !g.has_edge(e)) {
            out.valid = false;
            out.non_edge = e;
            return out;
        }
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const edge& e = edges[i];
            const edge& f = edges[j];
            if (e == f) {
                out.valid = false;
                out.duplicates = 1;
                out.conflict = std::pair{e, f};
                return out;
            }
            if (edges_independent(g, e, f))
                continue;
            out.valid = false;
            out.conflict = std::pair{e, f};
            if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b)
                return out;
            for (vertex_id x : {e.a, e.b})
                for (vertex_id y : {f.a, f.b})
                    if (!out.joining && g.adjacent(x, y))
                        out.joining = edge(x, y);
            return out;
        }
    return out;
}

bool is_induced_matching(const graph& g, std::span<const edge> edges) {
    return check_induced_matching(g, edges).valid;
}

induced_matching greedy_maximal_induced_matching(const graph& g) {
    induced_matching out;
    out.graph_order = g.order();
    // A vertex is blocked once it lies in the closed ball of a chosen edge;
    // an edge is compatible with the choice iff both endpoints are unblocked.
    std::vector<bool> blocked(g.order(), false);
    for (const auto& e : g.edges()) {
        if (blocked[e.a] || blocked[e.b])
            continue;
        out.edges.push_back(e);
        for (vertex_id x : {e.a, e.b}) {
            blocked[x] = true;
            for (vertex_id w : g.neighbors(x))
                blocked[w] = true;
        }
    }
    return out;
}

namespace {

class edge_branch_and_bound {
public:
    edge_branch_and_bound(const graph& g, std::size_t budget)
        : g_(g), edges_(g.edges()), budget_(budget), words_((g.order() + 63) / 64),
          balls_(edges_.size() * words_, 0), degree_(g.order(), 0), covered_(g.order(), false) {
        for (std::size_t i = 0; i < edges_.size(); ++i)
            for (vertex_id x : {edges_[i].a, edges_[i].b}) {
                set_ball(i, x);
                for (vertex_id w : g.neighbors(x))
                    set_ball(i, w);
            }
        best_ = greedy_maximal_induced_matching(g).edges;
    }

    exact_result run() {
        std::vector<std::uint32_t> all(edges_.size());
        for (std::uint32_t i = 0; i < all.size(); ++i)
            all[i] = i;
        search(all);
        exact_result out;
        out.matching.graph_order = g_.order();
        out.matching.edges = best_;
        std::sort(out.matching.edges.begin(), out.matching.edges.end());
        out.nodes = nodes_;
        return out;
    }

private:
    void set_ball(std::size_t e, vertex_id v) {
        balls_[e * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    }
    bool in_ball(std::size_t e, vertex_id v) const {
        return (balls_[e * words_ + v / 64] >> (v % 64)) & 1U;
    }

    // Stars are cliques of the conflict relation, so a cover of the available
    // edges by stars bounds how many of them one induced matching can use. The
    // chosen edges are also vertex-disjoint, giving the second bound.
    std::size_t upper_bound(const std::vector<std::uint32_t>& avail) {
        touched_.clear();
        for (auto i : avail)
            for (vertex_id x : {edges_[i].a, edges_[i].b}) {
                if (degree_[x]++ == 0)
                    touched_.push_back(x);
            }
        std::sort(touched_.begin(), touched_.end(), [&](vertex_id x, vertex_id y) {
            return degree_[x] != degree_[y] ? degree_[x] > degree_[y] : x < y;
        });
        // Greedy cover by descending degree: a vertex opens a star if any of
        // its available edges is still uncovered.
        std::size_t stars = 0;
        for (vertex_id x : touched_) {
            bool opens = false;
            for (vertex_id w : g_.neighbors(x))
                if (!covered_[w] && degree_[w] > 0 && edge_available(avail, x, w)) {
                    opens = true;
                    break;
                }
            if (opens)
                ++stars;
            covered_[x] = true;
        }
        for (vertex_id x : touched_) {
            covered_[x] = false;
            degree_[x] = 0;
        }
        return std::min(stars, touched_.size() / 2);
    }

    bool edge_available(const std::vector<std::uint32_t>& avail, vertex_id x, vertex_id w) const {
        edge e(x, w);
        auto it = std::lower_bound(avail.begin(), avail.end(), e,
                                   [&](std::uint32_t i, const edge& key) { return edges_[i] < key; });
        return it != avail.end() && edges_[*it] == e;
    }

    std::size_t pick(const std::vector<std::uint32_t>& avail) {
        touched_.clear();
        for (auto i : avail)
            for (vertex_id x : {edges_[i].a, edges_[i].b})
                if (degree_[x]++ == 0)
                    touched_.push_back(x);
        std::size_t best_pos = 0, best_deg = 0;
        for (std::size_t p = 0; p < avail.size(); ++p) {
            const edge& e = edges_[avail[p]];
            std::size_t d = std::max(degree_[e.a], degree_[e.b]);
            if (d > best_deg) {
                best_deg = d;
                best_pos = p;
            }
        }
        for (vertex_id x : touched_)
            degree_[x] = 0;
        return best_pos;
    }

    void search(const std::vector<std::uint32_t>& avail) {
        if (++nodes_ > budget_)
            throw budget_exhausted(budget_);
        if (avail.empty()) {
            if (chosen_.size() > best_.size())
                best_ = chosen_;
            return;
        }
        if (chosen_.size() + upper_bound(avail) <= best_.size())
            return;

        const std::size_t pos = pick(avail);
        const std::uint32_t e = avail[pos];

        std::vector<std::uint32_t> next;
        next.reserve(avail.size());
        for (auto f : avail)
            if (!in_ball(e, edges_[f].a) && !in_ball(e, edges_[f].b))
                next.push_back(f);
        chosen_.push_back(edges_[e]);
        search(next);
        chosen_.pop_back();

        next.assign(avail.begin(), avail.end());
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(pos));
        search(next);
    }

    const graph& g_;
    std::vector<edge> edges_;
    std::size_t budget_;
    std::size_t words_;
    std::vector<std::uint64_t> balls_;
    std::vector<std::size_t> degree_;
    std::vector<bool> covered_;
    std::vector<vertex_id> touched_;
    std::vector<edge> chosen_;
    std::vector<edge> best_;
    std::size_t nodes_ = 0;
};

} // namespace

exact_result exact_max_induced_matching_stats(const graph& g, std::size_t node_budget) {
    return edge_branch_and_bound(g, node_budget).run();
}

induced_matching exact_max_induced_matching(const graph& g, std::size_t node_budget) {
    return exact_max_induced_matching_stats(g, node_budget).matching;
}

} // namespace inmatch
