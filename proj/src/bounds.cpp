#include "inmatch/bounds.hpp"

#include <numeric>

#include "inmatch/error.hpp"
#include "inmatch/families.hpp"

namespace inmatch {

rational::rational(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw error(errc::precondition_violated, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::string rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t c5_squared_components(const graph& g) {
    std::size_t count = 0;
    for (const auto& comp : components(g))
        if (comp.size() == 10 && is_c5_squared(induced_subgraph(g, comp).g))
            ++count;
    return count;
}

std::size_t bound_report::theorem_rhs_numerator() const noexcept {
    return n - isolated - c5sq;
}

bound_report make_bound_report(const graph& g, std::size_t matching_size) {
    bound_report r;
    r.n = g.order();
    r.m = g.size();
    r.isolated = isolated_count(g);
    r.c5sq = c5_squared_components(g);
    r.matching_size = matching_size;
    r.guarantee_ok = 9 * matching_size >= r.theorem_rhs_numerator();
    r.m20_ok = 20 * matching_size >= r.m;
    r.m18_applicable = r.c5sq == 0;
    r.m18_ok = r.m18_applicable && 18 * matching_size >= r.m;
    if (r.m > 0 && r.c5sq == 0)
        r.conjecture_ratio = rational(static_cast<std::int64_t>(17 * matching_size),
                                      static_cast<std::int64_t>(r.m));
    return r;
}

corollary_result corollary_check(const bound_report& r) {
    corollary_result out;
    auto fail = [&](std::string what) {
        out.ok = false;
        out.violations.push_back(std::move(what));
    };
    if (20 * r.matching_size < r.m)
        fail("m/20 violated: 20*" + std::to_string(r.matching_size) + " < " + std::to_string(r.m));
    if (r.c5sq == 0 && 18 * r.matching_size < r.m)
        fail("m/18 violated: 18*" + std::to_string(r.matching_size) + " < " + std::to_string(r.m));
    if (r.m > 2 * (r.n - r.isolated))
        fail("degree bound violated: m=" + std::to_string(r.m) + " > 2(n-i)=" +
             std::to_string(2 * (r.n - r.isolated)));
    return out;
}

} // namespace inmatch
