#include "eqcolor/oracle.hpp"

#if defined(EQCOLOR_CLOSEDFORM_HPP) || defined(EQCOLOR_COLORER_HPP)
#error "the oracle must not depend on the closed forms or the colorer"
#endif

#include <gtest/gtest.h>

#include <cmath>

using namespace eqcolor;

namespace {

Graph cycle(Int n) {
    Graph g(n);
    for (Int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

// Tries all k^|V| assignments.
bool naive_colorable(const Graph& g, Int k) {
    const Int n = g.vertex_count();
    std::vector<Int> colors(static_cast<std::size_t>(n), 0);
    while (true) {
        if (is_equitable(verify_coloring(g, Coloring(k, colors)))) return true;
        std::size_t pos = 0;
        while (pos < colors.size() && ++colors[pos] == k) colors[pos++] = 0;
        if (pos == colors.size()) return false;
    }
}

std::vector<Graph> small_graphs() {
    std::vector<Graph> out;
    out.push_back(cycle(5));
    out.push_back(cycle(6));
    out.push_back(build_multipartite(std::vector<Int>{1, 3}));
    out.push_back(build_multipartite(std::vector<Int>{3, 3}));
    out.push_back(build_multipartite(std::vector<Int>{1, 2, 4}));
    out.push_back(build_product(ProductSpec({1, 1}, 4)));
    out.push_back(build_product(ProductSpec({1, 2}, 3)));
    out.push_back(build_product(ProductSpec({1, 1, 1}, 3)));
    // A 7-vertex graph with no structure to lean on.
    Graph odd(7);
    for (auto [u, v] : std::vector<std::pair<Int, Int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}, {1, 6}}) {
        odd.add_edge(u, v);
    }
    out.push_back(std::move(odd));
    return out;
}

} // namespace

TEST(KColorable, Examples) {
    EXPECT_TRUE(k_colorable(cycle(6), 2).feasible);
    EXPECT_FALSE(k_colorable(build_multipartite(std::vector<Int>{1, 1, 1}), 2).feasible);
    EXPECT_FALSE(k_colorable(build_product(ProductSpec({1, 1, 1}, 3)), 2).feasible);
    EXPECT_THROW(k_colorable(cycle(4), 0), std::domain_error);
}

TEST(KColorable, LargeKIsAlwaysFeasible) {
    const Graph k4 = build_multipartite(std::vector<Int>{1, 1, 1, 1});
    for (Int k = 4; k <= 9; ++k) {
        const auto result = k_colorable(k4, k);
        ASSERT_TRUE(result.feasible);
        EXPECT_TRUE(is_equitable(verify_coloring(k4, *result.witness)));
    }
}

TEST(KColorable, MatchesNaiveEnumeration) {
    for (const Graph& g : small_graphs()) {
        for (Int k = 1; k <= g.vertex_count(); ++k) {
            if (std::pow(static_cast<double>(k), static_cast<double>(g.vertex_count())) > 2e6) continue;
            const auto result = k_colorable(g, k);
            ASSERT_EQ(result.feasible, naive_colorable(g, k)) << "|V|=" << g.vertex_count() << " k=" << k;
            ASSERT_EQ(result.witness.has_value(), result.feasible);
            if (result.witness) {
                EXPECT_TRUE(is_equitable(verify_coloring(g, *result.witness)));
            }
        }
    }
}

TEST(KColorable, BudgetIsDistinguishable) {
    const Graph g = build_product(ProductSpec({2, 2}, 4));
    EXPECT_THROW(k_colorable(g, 3, 5), search_budget_exceeded);
}

TEST(ChiEqExact, Examples) {
    EXPECT_EQ(chi_eq_exact(cycle(6)), 2);
    EXPECT_EQ(chi_eq_exact(build_multipartite(std::vector<Int>{1, 3})), 3);
    EXPECT_EQ(chi_eq_exact(Graph(5)), 1);
}

TEST(ChiEqStarExact, Examples) {
    // K_{3,3}: k = 3 would need three classes of two inside sides of three.
    EXPECT_EQ(chi_eq_star_exact(build_multipartite(std::vector<Int>{3, 3})), 4);
    EXPECT_FALSE(k_colorable(build_multipartite(std::vector<Int>{3, 3}), 3).feasible);
    EXPECT_EQ(chi_eq_star_exact(build_product(ProductSpec({1, 1, 1}, 3))), 3);
    EXPECT_EQ(chi_eq_star_exact(build_multipartite(std::vector<Int>{1, 3})), 3);
    EXPECT_EQ(chi_eq_star_exact(Graph(4)), 1);
}

TEST(ChiEqStarExact, TailIsFeasible) {
    for (const Graph& g : small_graphs()) {
        const Int star = chi_eq_star_exact(g);
        for (Int k = star; k <= g.vertex_count() + 2; ++k) EXPECT_TRUE(k_colorable(g, k).feasible);
        if (star > 1) {
            EXPECT_FALSE(k_colorable(g, star - 1).feasible);
        }
        EXPECT_LE(chi_eq_exact(g), star);
    }
}

TEST(FeasibilityProfile, AgreesWithExactValues) {
    const Graph g = build_product(ProductSpec({1, 1}, 5));
    const auto profile = feasibility_profile(g);
    ASSERT_EQ(profile.size(), 10U);
    EXPECT_EQ(profile, (std::vector<bool>{false, true, false, true, true, true, true, true, true, true}));
    EXPECT_EQ(chi_eq_exact(g), 2);
    EXPECT_EQ(chi_eq_star_exact(g), 4);
}
