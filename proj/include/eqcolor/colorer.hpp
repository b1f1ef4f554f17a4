#ifndef EQCOLOR_COLORER_HPP
#define EQCOLOR_COLORER_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqcolor/budget.hpp"
#include "eqcolor/closedform.hpp"
#include "eqcolor/graphs.hpp"
#include "eqcolor/partitions.hpp"
#include "eqcolor/product_spec.hpp"

namespace eqcolor {

/// One q-partition per part size, all at the same q. An equitable coloring of
/// K_{sizes} with class sizes in {q, q+1} is exactly such a family.
struct SimultaneousPartition {
    Int q = 0;
    std::vector<QPartition> per_part;

    Int total_count() const {
        Int total = 0;
        for (const auto& p : per_part) total += p.count();
        return total;
    }
    std::vector<Int> sizes() const {
        std::vector<Int> out;
        for (const auto& p : per_part) out.push_back(p.n);
        return out;
    }
    bool valid() const {
        return !per_part.empty() &&
               std::all_of(per_part.begin(), per_part.end(), [this](const QPartition& p) { return p.q == q && p.valid(); });
    }
    friend bool operator==(const SimultaneousPartition&, const SimultaneousPartition&) = default;
};

namespace detail {

inline Int total(std::span<const Int> sizes) { return std::accumulate(sizes.begin(), sizes.end(), Int{0}); }

// Addend-count range of a q-partition of s, treating s < q as impossible.
inline std::optional<CountRange> count_range(Int s, Int q) {
    if (s == 0) return CountRange{0, 0};
    if (q > s) return std::nullopt;
    return addend_count_bounds(s, q);
}

} // namespace detail

/// Finds q-partitions of every size with exactly k addends in total, where
/// q = floor(N/k). Counts start at each part's minimum and the remainder is
/// handed out in part order.
inline std::optional<SimultaneousPartition> simultaneous_partition(std::span<const Int> sizes, Int k) {
    detail::require_sizes(sizes);
    const Int total = detail::total(sizes);
    if (k < 1 || k > total) throw std::domain_error("simultaneous_partition: need 1 <= k <= sum of sizes");
    const Int q = total / k;
    std::vector<CountRange> ranges;
    Int lo = 0;
    Int hi = 0;
    for (Int s : sizes) {
        const auto range = detail::count_range(s, q);
        if (!range) return std::nullopt;
        ranges.push_back(*range);
        lo += range->min;
        hi += range->max;
    }
    if (k < lo || k > hi) return std::nullopt;

    SimultaneousPartition sp{q, {}};
    Int spare = k - lo;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const Int extra = std::min(spare, ranges[i].max - ranges[i].min);
        spare -= extra;
        sp.per_part.push_back(*detail::with_count(sizes[i], q, ranges[i].min + extra));
    }
    return sp;
}

/// Every size split into its minimal q-partition.
inline std::optional<SimultaneousPartition> minimal_simultaneous_partition(std::span<const Int> sizes, Int q) {
    detail::require_sizes(sizes);
    SimultaneousPartition sp{q, {}};
    for (Int s : sizes) {
        if (q < 1 || q > s) return std::nullopt;
        const auto p = minimal_q_partition(s, q);
        if (!p) return std::nullopt;
        sp.per_part.push_back(*p);
    }
    return sp;
}

/// Lays the partition out on K_{sizes}: inside part i, a_i classes of size q
/// then b_i classes of size q+1, each on a contiguous vertex range. Colors are
/// numbered in that order; colors beyond the partition's count stay empty.
inline Coloring coloring_from_partition(const SimultaneousPartition& sp, Int k) {
    if (!sp.valid()) throw std::domain_error("coloring_from_partition: invalid partition");
    if (k < sp.total_count()) throw std::domain_error("coloring_from_partition: k below the number of classes");
    std::vector<Int> colors;
    Int next = 0;
    for (const auto& p : sp.per_part) {
        for (Int c = 0; c < p.count(); ++c) {
            const Int width = c < p.a ? p.q : p.q + 1;
            colors.insert(colors.end(), static_cast<std::size_t>(width), next);
            ++next;
        }
    }
    return Coloring(k, std::move(colors));
}

/// Equitable k-coloring of K_{sizes}, or nullopt when none exists. For k at
/// or above the vertex count every vertex gets its own color.
inline std::optional<Coloring> color_multipartite(std::span<const Int> sizes, Int k) {
    detail::require_sizes(sizes);
    if (k < 1) throw std::domain_error("color_multipartite: k must be positive");
    const Int total = detail::total(sizes);
    if (k >= total) {
        std::vector<Int> colors(static_cast<std::size_t>(total));
        std::iota(colors.begin(), colors.end(), Int{0});
        return Coloring(k, std::move(colors));
    }
    const auto sp = simultaneous_partition(sizes, k);
    if (!sp) return std::nullopt;
    return coloring_from_partition(*sp, k);
}

/// One step of the inductive construction: a family with one more class.
///
/// In order of preference: split q copies of (q+1) in the first part that has
/// them; if every part is a multiple of q, rewrite the first part with at
/// least q-1 addends on the (q-1) scale; if exactly one part is not a multiple
/// of q, replace it by its minimal (q-1)-partition. The untouched parts are
/// re-read on the (q-1) scale in the last two cases. nullopt when none of
/// these apply.
inline std::optional<SimultaneousPartition> increment_coloring(const SimultaneousPartition& sp) {
    if (!sp.valid()) throw std::domain_error("increment_coloring: invalid partition");
    const Int q = sp.q;

    for (std::size_t i = 0; i < sp.per_part.size(); ++i) {
        if (sp.per_part[i].b >= q) {
            SimultaneousPartition next = sp;
            next.per_part[i] = *split_step(sp.per_part[i]);
            return next;
        }
    }
    if (q < 2) return std::nullopt;

    std::vector<std::size_t> ragged;
    for (std::size_t i = 0; i < sp.per_part.size(); ++i) {
        if (sp.per_part[i].b != 0) ragged.push_back(i);
    }
    if (ragged.size() > 1) return std::nullopt;

    SimultaneousPartition next{q - 1, {}};
    for (const auto& p : sp.per_part) next.per_part.push_back(QPartition{p.n, q - 1, 0, p.a});

    if (ragged.empty()) {
        for (std::size_t i = 0; i < sp.per_part.size(); ++i) {
            if (auto step = split_step(sp.per_part[i])) {
                next.per_part[i] = *step;
                return next;
            }
        }
        return std::nullopt;
    }

    const QPartition& odd = sp.per_part[ragged.front()];
    if (q - 1 > odd.n) return std::nullopt;
    const auto replacement = minimal_q_partition(odd.n, q - 1);
    if (!replacement || replacement->count() != odd.count() + 1) return std::nullopt;
    next.per_part[ragged.front()] = *replacement;
    return next;
}

enum class ColoringTier { Block, Mixed, Search };

inline const char* to_string(ColoringTier t) {
    switch (t) {
    case ColoringTier::Block: return "block";
    case ColoringTier::Mixed: return "mixed";
    case ColoringTier::Search: return "search";
    }
    return "?";
}

struct ProductColoring {
    std::optional<Coloring> coloring;  // nullopt: proven infeasible
    ColoringTier tier = ColoringTier::Block;
    std::uint64_t nodes = 0;
};

namespace detail {

// Mixed block/column colorings of the product.
//
// A class of the product is independent iff its vertices share a block or
// share a column. Describe a coloring by, for each column s, how many
// vertices x_{i,s} <= m_i of each block go to classes living in that column.
// Column s then splits sum_i x_{i,s} vertices into classes, block i splits
// its m_i n - sum_s x_{i,s} leftover vertices into classes, and all classes
// have size q or q+1 with q = floor(mn/k). Each piece contributes an interval
// of class counts, so feasibility is: k lies in the summed interval. Columns
// are interchangeable, so only nondecreasing sequences of column shapes are
// visited.
class MixedSearch {
public:
    MixedSearch(const ProductSpec& spec, Int k, NodeBudget& budget)
        : spec_(spec), k_(k), q_(spec.vertex_count() / k), budget_(budget) {
        std::vector<Int> shape(spec.r(), 0);
        enumerate_shapes(shape, 0);
        used_.assign(spec.r(), 0);
    }

    std::optional<Coloring> run() {
        std::vector<std::size_t> chosen;
        if (!descend(chosen, 0, Int{0}, Int{0})) return std::nullopt;
        return build();
    }

private:
    struct Shape {
        std::vector<Int> take;  // vertices taken from each block
        CountRange classes;
    };

    void enumerate_shapes(std::vector<Int>& shape, std::size_t i) {
        if (i == shape.size()) {
            const Int size = std::accumulate(shape.begin(), shape.end(), Int{0});
            if (const auto range = count_range(size, q_)) shapes_.push_back({shape, *range});
            return;
        }
        for (Int x = 0; x <= spec_.part(i); ++x) {
            shape[i] = x;
            enumerate_shapes(shape, i + 1);
        }
    }

    bool descend(std::vector<std::size_t>& chosen, std::size_t from, Int lo, Int hi) {
        budget_.tick();
        if (static_cast<Int>(chosen.size()) == spec_.n()) return leaf(chosen, lo, hi);
        for (std::size_t s = from; s < shapes_.size(); ++s) {
            chosen.push_back(s);
            for (std::size_t i = 0; i < spec_.r(); ++i) used_[i] += shapes_[s].take[i];
            const bool found = descend(chosen, s, lo + shapes_[s].classes.min, hi + shapes_[s].classes.max);
            for (std::size_t i = 0; i < spec_.r(); ++i) used_[i] -= shapes_[s].take[i];
            if (found) return true;
            chosen.pop_back();
        }
        return false;
    }

    bool leaf(const std::vector<std::size_t>& chosen, Int lo, Int hi) {
        std::vector<CountRange> blocks;
        for (std::size_t i = 0; i < spec_.r(); ++i) {
            const auto range = count_range(spec_.part(i) * spec_.n() - used_[i], q_);
            if (!range) return false;
            blocks.push_back(*range);
            lo += range->min;
            hi += range->max;
        }
        if (k_ < lo || k_ > hi) return false;
        chosen_ = chosen;
        block_ranges_ = std::move(blocks);
        return true;
    }

    Coloring build() const {
        // Per-piece class counts: minimum everywhere, spare handed out in order
        // (columns first, then blocks).
        std::vector<CountRange> pieces;
        for (std::size_t s : chosen_) pieces.push_back(shapes_[s].classes);
        pieces.insert(pieces.end(), block_ranges_.begin(), block_ranges_.end());
        Int spare = k_;
        for (const auto& p : pieces) spare -= p.min;
        std::vector<Int> counts;
        for (const auto& p : pieces) {
            const Int extra = std::min(spare, p.max - p.min);
            spare -= extra;
            counts.push_back(p.min + extra);
        }

        std::vector<Int> colors(static_cast<std::size_t>(spec_.vertex_count()), -1);
        Int next_color = 0;
        auto cut = [&](const std::vector<Int>& vertices, Int count) {
            if (vertices.empty()) return;
            const QPartition p = *detail::with_count(static_cast<Int>(vertices.size()), q_, count);
            std::size_t pos = 0;
            for (Int c = 0; c < p.count(); ++c) {
                const Int width = c < p.a ? q_ : q_ + 1;
                for (Int t = 0; t < width; ++t) colors[static_cast<std::size_t>(vertices[pos++])] = next_color;
                ++next_color;
            }
        };

        for (std::size_t col = 0; col < chosen_.size(); ++col) {
            const Shape& shape = shapes_[chosen_[col]];
            std::vector<Int> vertices;
            for (std::size_t i = 0; i < spec_.r(); ++i) {
                for (Int j = 0; j < shape.take[i]; ++j) {
                    vertices.push_back(product_index(spec_, {static_cast<Int>(i), j, static_cast<Int>(col)}));
                }
            }
            cut(vertices, counts[col]);
        }
        for (std::size_t i = 0; i < spec_.r(); ++i) {
            std::vector<Int> vertices;
            const Int begin = spec_.block_offset(i);
            for (Int v = begin; v < begin + spec_.part(i) * spec_.n(); ++v) {
                if (colors[static_cast<std::size_t>(v)] < 0) vertices.push_back(v);
            }
            cut(vertices, counts[chosen_.size() + i]);
        }
        return Coloring(k_, std::move(colors));
    }

    const ProductSpec& spec_;
    Int k_;
    Int q_;
    NodeBudget& budget_;
    std::vector<Shape> shapes_;
    std::vector<Int> used_;
    std::vector<std::size_t> chosen_;
    std::vector<CountRange> block_ranges_;
};

// Exact search that builds one color class at a time. Each new class contains
// the lowest uncolored vertex, so class order carries no symmetry. Vertices
// with identical neighbourhoods are interchangeable; a class may only take
// such a vertex if every lower twin is already colored.
class ClassSearch {
public:
    ClassSearch(const Graph& g, Int k, NodeBudget& budget) : g_(g), budget_(budget) {
        const Int n = g.vertex_count();
        lo_ = n / k;
        big_left_ = n % k;
        small_left_ = k - big_left_;
        color_.assign(static_cast<std::size_t>(n), -1);
        lower_twin_.assign(static_cast<std::size_t>(n), -1);
        for (Int v = 0; v < n; ++v) {
            for (Int u = v - 1; u >= 0; --u) {
                if (std::ranges::equal(g.row(u), g.row(v))) {
                    lower_twin_[static_cast<std::size_t>(v)] = u;
                    break;
                }
            }
        }
    }

    std::optional<std::vector<Int>> run() {
        if (next_class()) return color_;
        return std::nullopt;
    }

private:
    bool next_class() {
        budget_.tick();
        const auto first = std::find(color_.begin(), color_.end(), Int{-1});
        if (first == color_.end()) return true;
        const Int v = static_cast<Int>(first - color_.begin());
        std::vector<Int> members{v};
        color_[static_cast<std::size_t>(v)] = classes_;
        if (big_left_ > 0) {
            --big_left_;
            if (grow(members, lo_ + 1, v + 1)) return true;
            ++big_left_;
        }
        if (small_left_ > 0) {
            --small_left_;
            if (grow(members, lo_, v + 1)) return true;
            ++small_left_;
        }
        color_[static_cast<std::size_t>(v)] = -1;
        return false;
    }

    bool compatible(Int w, const std::vector<Int>& members) const {
        if (color_[static_cast<std::size_t>(w)] >= 0) return false;
        return std::none_of(members.begin(), members.end(), [&](Int u) { return g_.adjacent(u, w); });
    }

    bool grow(std::vector<Int>& members, Int target, Int from) {
        budget_.tick();
        if (static_cast<Int>(members.size()) == target) {
            ++classes_;
            if (next_class()) return true;
            --classes_;
            return false;
        }
        std::vector<Int> candidates;
        for (Int w = from; w < g_.vertex_count(); ++w) {
            if (compatible(w, members)) candidates.push_back(w);
        }
        const Int needed = target - static_cast<Int>(members.size());
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (static_cast<Int>(candidates.size() - c) < needed) break;
            const Int w = candidates[c];
            if (!compatible(w, members)) continue;
            const Int twin = lower_twin_[static_cast<std::size_t>(w)];
            if (twin >= 0 && color_[static_cast<std::size_t>(twin)] < 0) continue;
            members.push_back(w);
            color_[static_cast<std::size_t>(w)] = classes_;
            if (grow(members, target, w + 1)) return true;
            color_[static_cast<std::size_t>(w)] = -1;
            members.pop_back();
        }
        return false;
    }

    const Graph& g_;
    NodeBudget& budget_;
    Int lo_ = 0;
    Int big_left_ = 0;
    Int small_left_ = 0;
    Int classes_ = 0;
    std::vector<Int> color_;
    std::vector<Int> lower_twin_;
};

inline ProductColoring checked(const Graph& g, Coloring c, ColoringTier tier, std::uint64_t nodes) {
    const Verdict verdict = verify_coloring(g, c);
    if (!is_equitable(verdict)) {
        throw std::logic_error(std::string("color_product: ") + to_string(tier) + " tier produced an invalid coloring");
    }
    return {std::move(c), tier, nodes};
}

} // namespace detail

/// Equitable k-coloring of K_{m_1,...,m_r} x K_n.
///
/// Tier 1 lifts a coloring of the companion multipartite graph (its classes
/// stay independent in the product). Tier 2 searches mixed block/column class
/// layouts. Tier 3 is an exhaustive search on the explicit graph and is the
/// only tier allowed to report infeasibility. Returned colorings are always
/// verified. Throws search_budget_exceeded when tiers 2 and 3 together
/// exceed `budget` nodes.
inline ProductColoring color_product(const ProductSpec& spec, Int k, std::uint64_t budget = default_search_budget) {
    if (k < 1) throw std::domain_error("color_product: k must be positive");
    const Graph g = build_product(spec);
    const std::vector<Int> blocks = spec.block_sizes();
    if (auto lifted = color_multipartite(blocks, k)) return detail::checked(g, *std::move(lifted), ColoringTier::Block, 0);

    NodeBudget nodes(budget);
    detail::MixedSearch mixed(spec, k, nodes);
    if (auto c = mixed.run()) return detail::checked(g, *std::move(c), ColoringTier::Mixed, nodes.used());

    detail::ClassSearch exact(g, k, nodes);
    if (auto colors = exact.run()) {
        return detail::checked(g, Coloring(k, *std::move(colors)), ColoringTier::Search, nodes.used());
    }
    return {std::nullopt, ColoringTier::Search, nodes.used()};
}

struct ClaimOneStep {
    Int k = 0;
    SimultaneousPartition partition;
};

struct ClaimOneChain {
    Int first_k = 0;
    Int last_k = 0;  // ceil(mn/(m+1)) - 1
    std::vector<ClaimOneStep> steps;
    bool completed = false;
};

/// Starting from the minimal (h*-1)-partitions of the block sizes, applies
/// increment_coloring until ceil(mn/(m+1)) - 1 classes are reached. Only
/// meaningful when the threshold theorem is in its second case.
inline ClaimOneChain claim_one_chain(const ProductSpec& spec) {
    const ThresholdReport report = equitable_threshold_product(spec);
    if (report.theorem_case != TheoremCase::Case2) throw std::domain_error("claim_one_chain: spec is not in Case 2");
    const std::vector<Int> blocks = spec.block_sizes();
    ClaimOneChain chain;
    chain.first_k = detail::sum_ceil(blocks, *report.h_star);
    chain.last_k = ceil_div(spec.vertex_count(), spec.m() + 1) - 1;
    auto current = minimal_simultaneous_partition(blocks, *report.h_star - 1);
    if (!current || current->total_count() != chain.first_k) return chain;
    chain.steps.push_back({chain.first_k, *current});
    for (Int k = chain.first_k; k < chain.last_k; ++k) {
        current = increment_coloring(*current);
        if (!current || current->total_count() != k + 1) return chain;
        chain.steps.push_back({k + 1, *current});
    }
    chain.completed = true;
    return chain;
}

} // namespace eqcolor

#endif
