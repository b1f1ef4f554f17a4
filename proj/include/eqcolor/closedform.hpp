#ifndef EQCOLOR_CLOSEDFORM_HPP
#define EQCOLOR_CLOSEDFORM_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqcolor/partitions.hpp"
#include "eqcolor/product_spec.hpp"

// Closed forms for equitable colorings of complete multipartite graphs and of
// K_{m_1,...,m_r} x K_n. Every comparison between a rational and a ceiling is
// done by cross-multiplication on integers.

namespace eqcolor {

/// Raised for products with sum(m_i) > n, where no formula is claimed.
class out_of_scope : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// x/y >= ceil(x/z), exactly.
constexpr bool ratio_at_least_ceil(Int x, Int y, Int z) { return x >= y * ceil_div(x, z); }

namespace detail {

inline void require_sizes(std::span<const Int> sizes) {
    if (sizes.empty()) throw std::domain_error("size list must be nonempty");
    for (Int s : sizes) {
        if (s < 1) throw std::domain_error("sizes must be positive");
    }
}

inline void require_applicable(const ProductSpec& spec) {
    if (!spec.theorem_applicable()) {
        throw out_of_scope("no closed form for " + spec.to_string() + ": sum of parts " +
                           std::to_string(spec.m()) + " exceeds n = " + std::to_string(spec.n()));
    }
}

inline Int sum_ceil(std::span<const Int> sizes, Int h) {
    Int total = 0;
    for (Int s : sizes) total += ceil_div(s, h);
    return total;
}

} // namespace detail

/// Largest k in [2, min(sizes)+1] with s/(k-1) >= ceil(s/k) for every size s.
/// The predicate set is not assumed monotone; the whole range is scanned.
inline Int h_multipartite(std::span<const Int> sizes) {
    detail::require_sizes(sizes);
    const Int upper = *std::min_element(sizes.begin(), sizes.end()) + 1;
    Int best = 2;
    for (Int k = 2; k <= upper; ++k) {
        const bool ok = std::all_of(sizes.begin(), sizes.end(),
                                    [k](Int s) { return ratio_at_least_ceil(s, k - 1, k); });
        if (ok) best = k;
    }
    return best;
}

/// sum ceil(s_i / h) with h = h_multipartite(sizes).
///
/// Note: against exhaustive search this value is the equitable chromatic
/// number of K_{sizes}; the threshold can be larger (K_{3,3}: 2 vs 4).
inline Int equitable_threshold_multipartite(std::span<const Int> sizes) {
    return detail::sum_ceil(sizes, h_multipartite(sizes));
}

/// ceil(mn/(m+1)), an upper bound on the threshold of K_m x K_n for m <= n.
inline Int lin_chang_bound(Int m, Int n) {
    if (m < 1 || n < 1) throw std::domain_error("lin_chang_bound: m and n must be positive");
    if (m > n) throw std::domain_error("lin_chang_bound: requires m <= n");
    return ceil_div(m * n, m + 1);
}

struct NumberResult {
    Int value = 0;
    Int h = 0;
};

/// Equitable chromatic number of the product: sum ceil(m_i n / h) with h taken
/// from the block sizes m_i n.
inline NumberResult equitable_number_product(const ProductSpec& spec) {
    detail::require_applicable(spec);
    const std::vector<Int> blocks = spec.block_sizes();
    const Int h = h_multipartite(blocks);
    return {detail::sum_ceil(blocks, h), h};
}

/// Smallest t >= m+2 such that some block has m_i n / t < ceil(m_i n/(t+1)),
/// or two distinct blocks are both not divisible by t.
inline Int h_star_product(const ProductSpec& spec) {
    detail::require_applicable(spec);
    const std::vector<Int> blocks = spec.block_sizes();
    const Int last = *std::max_element(blocks.begin(), blocks.end()) + 1;
    for (Int t = spec.m() + 2; t <= last; ++t) {
        const bool no_partition = std::any_of(blocks.begin(), blocks.end(),
                                              [t](Int s) { return !ratio_at_least_ceil(s, t, t + 1); });
        const auto indivisible = std::count_if(blocks.begin(), blocks.end(), [t](Int s) { return s % t != 0; });
        if (no_partition || indivisible >= 2) return t;
    }
    // t = max block + 1 always satisfies the first disjunct.
    throw std::logic_error("h_star_product: scan did not terminate");
}

enum class TheoremCase { Case1, Case2 };

/// How to read the first Case-1 subcondition of the threshold theorem:
/// sum floor(m_i n/(m+1)) < floor(mn/(m+1)), or the same with ceilings.
enum class CaseOneReading { Floor, Ceiling };

inline const char* to_string(TheoremCase c) { return c == TheoremCase::Case1 ? "Case1" : "Case2"; }
inline const char* to_string(CaseOneReading r) { return r == CaseOneReading::Floor ? "floor" : "ceiling"; }

struct ConditionTrace {
    bool floor_sum_below = false;    // sum floor(m_i n/(m+1)) < floor(mn/(m+1))
    bool ceiling_sum_below = false;  // sum ceil(m_i n/(m+1)) < ceil(mn/(m+1)); never true
    bool block_lacks_partition = false;  // some m_i n/(m+1) < ceil(m_i n/(m+2))
    std::optional<std::size_t> first_block_lacking;
    CaseOneReading reading = CaseOneReading::Floor;
    // r == 1: the product has no edges and its threshold is 1.
    bool edgeless = false;
};

struct ThresholdReport {
    std::vector<Int> parts;
    Int n = 0;
    Int chi_eq = 0;
    Int chi_eq_star = 0;
    Int h = 0;
    std::optional<Int> h_star;
    Int lin_chang_bound = 0;
    TheoremCase theorem_case = TheoremCase::Case1;
    ConditionTrace trace;
};

/// The threshold value sum ceil(m_i n / h*) or ceil(mn/(m+1)), together with
/// every intermediate quantity.
///
/// With a single part the product is edgeless, so the threshold is 1; the
/// case split is still evaluated and reported, but its value is not used.
inline ThresholdReport equitable_threshold_product(const ProductSpec& spec,
                                                   CaseOneReading reading = CaseOneReading::Floor) {
    detail::require_applicable(spec);
    const Int m = spec.m();
    const Int mn = spec.vertex_count();
    const std::vector<Int> blocks = spec.block_sizes();

    ThresholdReport report;
    report.parts = spec.parts();
    report.n = spec.n();
    const NumberResult number = equitable_number_product(spec);
    report.chi_eq = number.value;
    report.h = number.h;
    report.lin_chang_bound = lin_chang_bound(m, spec.n());

    ConditionTrace& trace = report.trace;
    trace.reading = reading;
    Int floor_sum = 0;
    Int ceil_sum = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        floor_sum += blocks[i] / (m + 1);
        ceil_sum += ceil_div(blocks[i], m + 1);
        if (!ratio_at_least_ceil(blocks[i], m + 1, m + 2) && !trace.first_block_lacking) {
            trace.first_block_lacking = i;
        }
    }
    trace.floor_sum_below = floor_sum < mn / (m + 1);
    trace.ceiling_sum_below = ceil_sum < ceil_div(mn, m + 1);
    trace.block_lacks_partition = trace.first_block_lacking.has_value();
    trace.edgeless = spec.r() == 1;

    const bool sum_below = reading == CaseOneReading::Floor ? trace.floor_sum_below : trace.ceiling_sum_below;
    if (sum_below || trace.block_lacks_partition) {
        report.theorem_case = TheoremCase::Case1;
        report.chi_eq_star = ceil_div(mn, m + 1);
    } else {
        report.theorem_case = TheoremCase::Case2;
        report.h_star = h_star_product(spec);
        report.chi_eq_star = detail::sum_ceil(blocks, *report.h_star);
    }
    if (trace.edgeless) report.chi_eq_star = 1;
    return report;
}

} // namespace eqcolor

#endif
