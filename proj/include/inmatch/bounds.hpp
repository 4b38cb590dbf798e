#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inmatch/graph.hpp"

namespace inmatch {

/// Non-negative rational in lowest terms; comparisons are exact.
class rational {
public:
    rational() = default;
    rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend bool operator==(const rational&, const rational&) = default;
    friend std::strong_ordering operator<=>(const rational& x, const rational& y) {
        return static_cast<__int128>(x.num_) * y.den_ <=> static_cast<__int128>(y.num_) * x.den_;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Number of components isomorphic to C5^2.
std::size_t c5_squared_components(const graph& g);

struct bound_report {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t isolated = 0;
    std::size_t c5sq = 0;
    std::size_t matching_size = 0;
    bool guarantee_ok = false;   ///< 9 * size >= n - i - n5
    bool m20_ok = false;         ///< 20 * size >= m
    bool m18_applicable = false; ///< n5 == 0
    bool m18_ok = false;         ///< 18 * size >= m, when applicable
    std::optional<rational> conjecture_ratio; ///< 17 * size / m; absent if m == 0 or n5 > 0

    /// n - i - n5, the quantity the size must cover ninefold.
    std::size_t theorem_rhs_numerator() const noexcept;
};

bound_report make_bound_report(const graph& g, std::size_t matching_size);

struct corollary_result {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Re-checks the edge-count corollaries (m/20 always, m/18 without C5^2
/// components) and the degree-4 edge bound m <= 2(n - i).
corollary_result corollary_check(const bound_report& r);

} // namespace inmatch
