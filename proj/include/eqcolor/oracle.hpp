#ifndef EQCOLOR_ORACLE_HPP
#define EQCOLOR_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "eqcolor/budget.hpp"
#include "eqcolor/graphs.hpp"

// Exhaustive decision procedure for equitable k-colorability of an explicit
// graph. Uses nothing but the graph itself: the closed forms and the
// constructive colorer are checked against it.

namespace eqcolor {

struct OracleResult {
    Int k = 0;
    bool feasible = false;
    std::optional<Coloring> witness;
    std::uint64_t nodes_explored = 0;
};

namespace detail {

class EquitableSearch {
public:
    EquitableSearch(const Graph& g, Int k, NodeBudget& budget)
        : g_(g), k_(k), budget_(budget), words_(g.words_per_row()) {
        const Int n = g.vertex_count();
        const Int lo = n / k;
        const Int big = n % k;
        // Classes [0, big) hold ceil(n/k) vertices, the rest floor(n/k).
        for (Int c = 0; c < k; ++c) capacity_.push_back(c < big ? lo + 1 : lo);
        group_end_ = {big, k};
        size_.assign(static_cast<std::size_t>(k), 0);
        members_.assign(static_cast<std::size_t>(k) * words_, 0);
        color_.assign(static_cast<std::size_t>(n), -1);

        order_.resize(static_cast<std::size_t>(n));
        std::iota(order_.begin(), order_.end(), Int{0});
        std::stable_sort(order_.begin(), order_.end(), [&](Int a, Int b) { return g.degree(a) > g.degree(b); });
    }

    bool run() { return place(0); }
    const std::vector<Int>& colors() const { return color_; }

private:
    bool conflicts(Int v, Int c) const {
        const auto row = g_.row(v);
        const Graph::Word* mem = members_.data() + static_cast<std::size_t>(c) * words_;
        for (std::size_t w = 0; w < words_; ++w) {
            if (row[w] & mem[w]) return true;
        }
        return false;
    }

    bool fits(Int v, Int c) const {
        return size_[static_cast<std::size_t>(c)] < capacity_[static_cast<std::size_t>(c)] && !conflicts(v, c);
    }

    void assign(Int v, Int c, bool on) {
        Graph::Word& word = members_[static_cast<std::size_t>(c) * words_ + static_cast<std::size_t>(v) / 64];
        const Graph::Word bit = Graph::Word{1} << (static_cast<std::size_t>(v) % 64);
        if (on) {
            word |= bit;
            ++size_[static_cast<std::size_t>(c)];
            color_[static_cast<std::size_t>(v)] = c;
        } else {
            word &= ~bit;
            --size_[static_cast<std::size_t>(c)];
            color_[static_cast<std::size_t>(v)] = -1;
        }
    }

    // Every class must still be fillable from the unplaced vertices that fit
    // into it, and every unplaced vertex needs some class.
    bool consistent(std::size_t next) const {
        std::vector<Int> room(static_cast<std::size_t>(k_), 0);
        for (std::size_t i = next; i < order_.size(); ++i) {
            const Int v = order_[i];
            bool any = false;
            for (Int c = 0; c < k_; ++c) {
                if (fits(v, c)) {
                    ++room[static_cast<std::size_t>(c)];
                    any = true;
                }
            }
            if (!any) return false;
        }
        for (Int c = 0; c < k_; ++c) {
            const auto ci = static_cast<std::size_t>(c);
            if (capacity_[ci] - size_[ci] > room[ci]) return false;
        }
        return true;
    }

    bool place(std::size_t next) {
        if (next == order_.size()) return true;
        budget_.tick();
        const Int v = order_[next];
        Int group_begin = 0;
        for (Int end : group_end_) {
            // Empty classes of equal capacity are interchangeable: only the
            // first empty one in each group may be opened.
            bool opened_empty = false;
            for (Int c = group_begin; c < end; ++c) {
                const bool empty = size_[static_cast<std::size_t>(c)] == 0;
                if (empty && opened_empty) break;
                if (!fits(v, c)) continue;
                opened_empty = opened_empty || empty;
                assign(v, c, true);
                if (consistent(next + 1) && place(next + 1)) return true;
                assign(v, c, false);
                if (empty) break;
            }
            group_begin = end;
        }
        return false;
    }

    const Graph& g_;
    Int k_;
    NodeBudget& budget_;
    std::size_t words_;
    std::vector<Int> capacity_;
    std::vector<Int> group_end_;
    std::vector<Int> size_;
    std::vector<Graph::Word> members_;
    std::vector<Int> color_;
    std::vector<Int> order_;
};

} // namespace detail

/// Decides whether g has an equitable k-coloring. For k >= |V| the answer is
/// always yes (classes of size 0 and 1).
inline OracleResult k_colorable(const Graph& g, Int k, std::uint64_t budget = default_search_budget) {
    if (k < 1) throw std::domain_error("k_colorable: k must be positive");
    OracleResult result;
    result.k = k;
    if (k >= g.vertex_count()) {
        std::vector<Int> colors(static_cast<std::size_t>(g.vertex_count()));
        std::iota(colors.begin(), colors.end(), Int{0});
        result.feasible = true;
        result.witness.emplace(k, std::move(colors));
        return result;
    }
    NodeBudget nodes(budget);
    detail::EquitableSearch search(g, k, nodes);
    result.feasible = search.run();
    result.nodes_explored = nodes.used();
    if (result.feasible) result.witness.emplace(k, search.colors());
    return result;
}

/// feasible[k-1] for k = 1..|V|.
inline std::vector<bool> feasibility_profile(const Graph& g, std::uint64_t budget = default_search_budget) {
    std::vector<bool> out;
    for (Int k = 1; k <= g.vertex_count(); ++k) out.push_back(k_colorable(g, k, budget).feasible);
    return out;
}

inline Int chi_eq_exact(const Graph& g, std::uint64_t budget = default_search_budget) {
    for (Int k = 1; k <= g.vertex_count(); ++k) {
        if (k_colorable(g, k, budget).feasible) return k;
    }
    return g.vertex_count();
}

/// Smallest t with an equitable k-coloring for every k in [t, |V|].
inline Int chi_eq_star_exact(const Graph& g, std::uint64_t budget = default_search_budget) {
    Int t = g.vertex_count();
    while (t > 1 && k_colorable(g, t - 1, budget).feasible) --t;
    return t;
}

} // namespace eqcolor

#endif
