#ifndef EQCOLOR_IO_HPP
#define EQCOLOR_IO_HPP

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqcolor/graphs.hpp"

// File formats. Vertices and colors are 1-based on disk, 0-based in memory.
//
//   graph     "p edge V E" then one "e u v" line per edge (u < v, sorted)
//   coloring  {"k":K,"colors":[c_1,...,c_V]}      (json)
//             one "s v c" line per vertex           (dimacs)

namespace eqcolor {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

inline std::string write_dimacs(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

namespace detail {

inline Int read_field(std::istringstream& in, std::size_t line, const char* what) {
    long long value = 0;
    if (!(in >> value)) throw parse_error(line, std::string("expected ") + what);
    return value;
}

inline void expect_end(std::istringstream& in, std::size_t line) {
    std::string extra;
    if (in >> extra) throw parse_error(line, "unexpected trailing token '" + extra + "'");
}

inline bool blank_or_comment(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r");
    return first == std::string::npos || text[first] == 'c';
}

} // namespace detail

/// Accepts "c" comment lines and either "p edge" or "p col" headers.
inline Graph read_dimacs(std::istream& in) {
    std::optional<Graph> graph;
    Int declared_edges = 0;
    Int seen_edges = 0;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (detail::blank_or_comment(text)) continue;
        std::istringstream fields(text);
        std::string tag;
        fields >> tag;
        if (tag == "p") {
            if (graph) throw parse_error(line, "duplicate problem line");
            std::string format;
            fields >> format;
            if (format != "edge" && format != "col") throw parse_error(line, "unknown format '" + format + "'");
            const Int vertices = detail::read_field(fields, line, "vertex count");
            declared_edges = detail::read_field(fields, line, "edge count");
            detail::expect_end(fields, line);
            if (vertices < 1 || declared_edges < 0) throw parse_error(line, "invalid problem line");
            graph.emplace(vertices);
        } else if (tag == "e") {
            if (!graph) throw parse_error(line, "edge before problem line");
            const Int u = detail::read_field(fields, line, "edge endpoint");
            const Int v = detail::read_field(fields, line, "edge endpoint");
            detail::expect_end(fields, line);
            if (u < 1 || v < 1 || u > graph->vertex_count() || v > graph->vertex_count()) {
                throw parse_error(line, "edge endpoint out of range");
            }
            if (u == v) throw parse_error(line, "loop on vertex " + std::to_string(u));
            graph->add_edge(u - 1, v - 1);
            ++seen_edges;
        } else {
            throw parse_error(line, "unknown line type '" + tag + "'");
        }
    }
    if (!graph) throw parse_error(line, "missing problem line");
    if (seen_edges != declared_edges) {
        throw parse_error(line, "problem line declares " + std::to_string(declared_edges) + " edges, found " +
                                    std::to_string(seen_edges));
    }
    return *std::move(graph);
}

inline Graph read_dimacs(const std::string& text) {
    std::istringstream in(text);
    return read_dimacs(in);
}

inline std::string write_coloring_json(const Coloring& c) {
    nlohmann::ordered_json doc;
    doc["k"] = c.k();
    auto& colors = doc["colors"] = nlohmann::ordered_json::array();
    for (Int color : c.colors()) colors.push_back(color + 1);
    return doc.dump() + "\n";
}

inline std::string write_coloring_dimacs(const Coloring& c) {
    std::ostringstream os;
    for (Int v = 0; v < c.vertex_count(); ++v) os << "s " << v + 1 << ' ' << c.color(v) + 1 << '\n';
    return os.str();
}

/// Coloring as read from disk, before it is matched against a graph.
struct ColoringFile {
    std::optional<Int> k;       // explicit only in the json form
    std::vector<Int> colors;    // 0-based
};

inline ColoringFile read_coloring(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    ColoringFile out;
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw parse_error(1, std::string("invalid json: ") + e.what());
        }
        if (!doc.is_object() || !doc.contains("k") || !doc.contains("colors") || !doc["k"].is_number_integer() ||
            !doc["colors"].is_array()) {
            throw parse_error(1, "json coloring needs integer \"k\" and array \"colors\"");
        }
        out.k = doc["k"].get<Int>();
        for (const auto& c : doc["colors"]) {
            if (!c.is_number_integer() || c.get<Int>() < 1) throw parse_error(1, "colors must be positive integers");
            out.colors.push_back(c.get<Int>() - 1);
        }
        return out;
    }

    std::map<Int, Int> assigned;
    std::istringstream in(text);
    std::string row;
    std::size_t line = 0;
    while (std::getline(in, row)) {
        ++line;
        if (detail::blank_or_comment(row)) continue;
        std::istringstream fields(row);
        std::string tag;
        fields >> tag;
        if (tag != "s") throw parse_error(line, "expected 's v c', got '" + tag + "'");
        const Int v = detail::read_field(fields, line, "vertex");
        const Int c = detail::read_field(fields, line, "color");
        detail::expect_end(fields, line);
        if (v < 1 || c < 1) throw parse_error(line, "vertex and color must be positive");
        if (!assigned.emplace(v, c - 1).second) throw parse_error(line, "vertex " + std::to_string(v) + " colored twice");
    }
    Int expected = 1;
    for (const auto& [v, c] : assigned) {
        if (v != expected) throw parse_error(line, "vertex " + std::to_string(expected) + " has no color");
        out.colors.push_back(c);
        ++expected;
    }
    return out;
}

/// k defaults to the largest color used.
inline Coloring to_coloring(const ColoringFile& file) {
    Int k = file.k.value_or(0);
    if (!file.k) {
        for (Int c : file.colors) k = std::max(k, c + 1);
    }
    return Coloring(k, file.colors);
}

} // namespace eqcolor

#endif
