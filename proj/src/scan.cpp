#include "inmatch/scan.hpp"

#include <algorithm>
#include <future>

#include "inmatch/error.hpp"
#include "inmatch/graph_io.hpp"
#include "inmatch/reduction.hpp"

namespace inmatch {

namespace {

scan_entry scan_one(const graph& g, std::size_t index, bool use_exact, const scan_options& opts) {
    scan_entry e;
    e.index = index;
    e.graph6 = encode_graph6(g);
    e.n = g.order();
    e.m = g.size();
    if (g.max_degree() > 4) {
        e.skipped = "maximum degree exceeds 4";
        return e;
    }
    if (c5_squared_components(g) > 0) {
        e.skipped = "C5^2 component";
        return e;
    }
    if (g.size() == 0) {
        e.skipped = "no edges";
        return e;
    }
    if (use_exact && g.order() <= opts.exact_limit) {
        try {
            e.value = exact_max_induced_matching(g, opts.node_budget).size();
            e.exact = true;
        } catch (const budget_exhausted&) {
            e.exact = false;
        }
    }
    if (!e.exact) {
        engine_options eo;
        eo.fallback_exact = true;
        eo.node_budget = opts.node_budget;
        e.value = bounded_induced_matching(g, eo).matching.size();
    }
    e.ratio = rational(static_cast<std::int64_t>(17 * e.value), static_cast<std::int64_t>(e.m));
    return e;
}

} // namespace

scan_summary conjecture_scan(std::span<const graph> sources, bool use_exact, const scan_options& opts) {
    scan_summary out;
    out.entries.resize(sources.size());
    const unsigned workers = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(sources.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < sources.size(); ++i)
            out.entries[i] = scan_one(sources[i], i, use_exact, opts);
    } else {
        // Strided split; each task writes only its own slots.
        std::vector<std::future<void>> tasks;
        for (unsigned w = 0; w < workers; ++w)
            tasks.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < sources.size(); i += workers)
                    out.entries[i] = scan_one(sources[i], i, use_exact, opts);
            }));
        for (auto& t : tasks)
            t.get();
    }

    for (const auto& e : out.entries) {
        if (e.skipped) {
            ++out.skipped;
            continue;
        }
        ++out.scanned;
        if (e.exact && *e.ratio < rational(1, 1))
            out.counterexample = true;
        bool better = !out.min_ratio || *e.ratio < *out.min_ratio ||
                      (*e.ratio == *out.min_ratio && e.graph6 < out.argmin_graph6);
        if (better) {
            out.min_ratio = e.ratio;
            out.argmin_index = e.index;
            out.argmin_graph6 = e.graph6;
            out.argmin_exact = e.exact;
        }
    }
    return out;
}

} // namespace inmatch
