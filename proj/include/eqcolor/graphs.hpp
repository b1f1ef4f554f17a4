#ifndef EQCOLOR_GRAPHS_HPP
#define EQCOLOR_GRAPHS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eqcolor/partitions.hpp"
#include "eqcolor/product_spec.hpp"

namespace eqcolor {

/// Vertex (x_i^j, y^s) of K_{m_1,...,m_r} x K_n, all indices 0-based.
struct ProductVertex {
    Int part = 0;
    Int within = 0;
    Int column = 0;
    friend constexpr bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

/// Linear index offset(i) + j*n + s. Block i occupies one contiguous range,
/// the same range part i has in the companion multipartite graph.
inline Int product_index(const ProductSpec& spec, const ProductVertex& v) {
    if (v.part < 0 || static_cast<std::size_t>(v.part) >= spec.r() || v.within < 0 ||
        v.within >= spec.part(static_cast<std::size_t>(v.part)) || v.column < 0 || v.column >= spec.n()) {
        throw std::out_of_range("vertex outside " + spec.to_string());
    }
    return spec.block_offset(static_cast<std::size_t>(v.part)) + v.within * spec.n() + v.column;
}

inline ProductVertex product_vertex(const ProductSpec& spec, Int index) {
    if (index < 0 || index >= spec.vertex_count()) throw std::out_of_range("vertex index out of range");
    Int rest = index;
    for (std::size_t i = 0; i < spec.r(); ++i) {
        const Int block = spec.part(i) * spec.n();
        if (rest < block) return {static_cast<Int>(i), rest / spec.n(), rest % spec.n()};
        rest -= block;
    }
    throw std::logic_error("product_vertex: unreachable");
}

/// Simple undirected graph stored as a dense symmetric bit matrix.
class Graph {
public:
    using Word = std::uint64_t;

    explicit Graph(Int vertex_count)
        : n_(vertex_count), words_(static_cast<std::size_t>((vertex_count + 63) / 64)),
          bits_(static_cast<std::size_t>(vertex_count) * words_, 0) {
        if (vertex_count < 1) throw std::domain_error("graph needs at least one vertex");
    }

    Int vertex_count() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    void add_edge(Int u, Int v) {
        check(u);
        check(v);
        if (u == v) throw std::domain_error("loops are not allowed (vertex " + std::to_string(u) + ")");
        if (adjacent(u, v)) return;
        set(u, v);
        set(v, u);
        ++edges_;
    }

    bool adjacent(Int u, Int v) const {
        return (row(u)[static_cast<std::size_t>(v) / 64] >> (static_cast<std::size_t>(v) % 64)) & 1U;
    }

    std::span<const Word> row(Int v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    Int degree(Int v) const {
        Int d = 0;
        for (Word w : row(v)) d += std::popcount(w);
        return d;
    }

    Int edge_count() const { return edges_; }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Int, Int>> edges() const {
        std::vector<std::pair<Int, Int>> out;
        out.reserve(static_cast<std::size_t>(edges_));
        for (Int u = 0; u < n_; ++u) {
            for (Int v = u + 1; v < n_; ++v) {
                if (adjacent(u, v)) out.emplace_back(u, v);
            }
        }
        return out;
    }

private:
    void check(Int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    void set(Int u, Int v) {
        bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |= Word{1}
                                                                                        << (static_cast<std::size_t>(v) % 64);
    }

    Int n_;
    std::size_t words_;
    std::vector<Word> bits_;
    Int edges_ = 0;
};

/// Part i occupies indices [s_0 + ... + s_{i-1}, s_0 + ... + s_i).
inline Graph build_multipartite(std::span<const Int> sizes) {
    if (sizes.empty()) throw std::domain_error("build_multipartite: no parts");
    std::vector<Int> part_of;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw std::domain_error("build_multipartite: part sizes must be positive");
        part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[i]), static_cast<Int>(i));
    }
    Graph g(static_cast<Int>(part_of.size()));
    for (Int u = 0; u < g.vertex_count(); ++u) {
        for (Int v = u + 1; v < g.vertex_count(); ++v) {
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) g.add_edge(u, v);
        }
    }
    return g;
}

/// (x_i^j, y^s) ~ (x_i'^j', y^s') iff i != i' and s != s'.
inline Graph build_product(const ProductSpec& spec) {
    Graph g(spec.vertex_count());
    std::vector<ProductVertex> label;
    label.reserve(static_cast<std::size_t>(spec.vertex_count()));
    for (Int v = 0; v < spec.vertex_count(); ++v) label.push_back(product_vertex(spec, v));
    for (Int u = 0; u < g.vertex_count(); ++u) {
        for (Int v = u + 1; v < g.vertex_count(); ++v) {
            const auto& a = label[static_cast<std::size_t>(u)];
            const auto& b = label[static_cast<std::size_t>(v)];
            if (a.part != b.part && a.column != b.column) g.add_edge(u, v);
        }
    }
    return g;
}

/// Assignment of every vertex to one of k colors (0-based), with the size of
/// each color class. Colors that are never used have class size 0.
class Coloring {
public:
    Coloring(Int k, std::vector<Int> colors) : k_(k), colors_(std::move(colors)), census_(static_cast<std::size_t>(std::max<Int>(k, 0)), 0) {
        if (k_ < 1) throw std::domain_error("a coloring needs k >= 1");
        for (Int c : colors_) {
            if (c < 0 || c >= k_) throw std::domain_error("color " + std::to_string(c) + " outside [0, k)");
            ++census_[static_cast<std::size_t>(c)];
        }
    }

    Int k() const { return k_; }
    Int vertex_count() const { return static_cast<Int>(colors_.size()); }
    Int color(Int v) const { return colors_.at(static_cast<std::size_t>(v)); }
    const std::vector<Int>& colors() const { return colors_; }
    const std::vector<Int>& census() const { return census_; }

    std::vector<std::vector<Int>> classes() const {
        std::vector<std::vector<Int>> out(static_cast<std::size_t>(k_));
        for (std::size_t v = 0; v < colors_.size(); ++v) out[static_cast<std::size_t>(colors_[v])].push_back(static_cast<Int>(v));
        return out;
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    Int k_;
    std::vector<Int> colors_;
    std::vector<Int> census_;
};

struct Equitable {
    friend constexpr bool operator==(const Equitable&, const Equitable&) = default;
};
struct ImproperEdge {
    Int u = 0;
    Int v = 0;
    friend constexpr bool operator==(const ImproperEdge&, const ImproperEdge&) = default;
};
struct NotEquitable {
    std::vector<Int> census;
    friend bool operator==(const NotEquitable&, const NotEquitable&) = default;
};
using Verdict = std::variant<Equitable, ImproperEdge, NotEquitable>;

inline bool is_equitable(const Verdict& v) { return std::holds_alternative<Equitable>(v); }

/// Properness is checked first: the first monochromatic edge in
/// lexicographic order is reported.
inline Verdict verify_coloring(const Graph& g, const Coloring& c) {
    if (c.vertex_count() != g.vertex_count()) {
        throw std::domain_error("coloring covers " + std::to_string(c.vertex_count()) + " vertices, graph has " +
                                std::to_string(g.vertex_count()));
    }
    for (Int u = 0; u < g.vertex_count(); ++u) {
        for (Int v = u + 1; v < g.vertex_count(); ++v) {
            if (c.color(u) == c.color(v) && g.adjacent(u, v)) return ImproperEdge{u, v};
        }
    }
    const auto [lo, hi] = std::minmax_element(c.census().begin(), c.census().end());
    if (*hi - *lo > 1) return NotEquitable{c.census()};
    return Equitable{};
}

enum class ClassShape { Block, Column, NotIndependent };

struct ClassKind {
    ClassShape shape = ClassShape::NotIndependent;
    Int index = -1;  // block i or column s
    friend constexpr bool operator==(const ClassKind&, const ClassKind&) = default;
};

/// Block(i) when every vertex lies in block i, Column(s) when every vertex
/// has K_n coordinate s, NotIndependent otherwise. Block wins ties.
inline ClassKind classify_class(const ProductSpec& spec, std::span<const Int> vertices) {
    if (vertices.empty()) throw std::domain_error("classify_class: empty vertex set");
    const ProductVertex first = product_vertex(spec, vertices.front());
    bool same_part = true;
    bool same_column = true;
    for (Int v : vertices) {
        const ProductVertex pv = product_vertex(spec, v);
        same_part = same_part && pv.part == first.part;
        same_column = same_column && pv.column == first.column;
    }
    if (same_part) return {ClassShape::Block, first.part};
    if (same_column) return {ClassShape::Column, first.column};
    return {ClassShape::NotIndependent, -1};
}

/// For an equitable floor(mn/(m+1))-coloring of K_{m_1 n,...,m_r n}: true iff
/// every class has m+1 or m+2 vertices.
inline bool check_lemma_3_2_sizes(const ProductSpec& spec, const Coloring& c) {
    if (!spec.theorem_applicable()) throw std::domain_error("check_lemma_3_2_sizes: requires m <= n");
    const Int m = spec.m();
    const Int k = spec.vertex_count() / (m + 1);
    if (c.k() != k) {
        throw std::domain_error("check_lemma_3_2_sizes: coloring has k=" + std::to_string(c.k()) +
                                ", expected floor(mn/(m+1)) = " + std::to_string(k));
    }
    return std::all_of(c.census().begin(), c.census().end(), [m](Int s) { return s == m + 1 || s == m + 2; });
}

} // namespace eqcolor

#endif
