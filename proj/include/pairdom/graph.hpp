#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pairdom/errors.hpp"

namespace pairdom {

using Vertex = int;

// Undirected simple graph on dense vertex ids 0..n-1. Adjacency lists are
// kept sorted ascending; everything downstream relies on that for
// determinism.
struct Graph {
    int n = 0;
    std::int64_t m = 0;
    std::vector<std::vector<Vertex>> adj;

    int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    bool is_complete() const {
        return m == static_cast<std::int64_t>(n) * (n - 1) / 2;
    }
};

// Shared by the parser and programmatic construction: validates range,
// self-loops and duplicates, sorts adjacency.
inline Graph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                        int line_base = 0) {
    if (n <= 0) throw ParseError(line_base, "vertex count must be positive");
    Graph g;
    g.n = n;
    g.m = static_cast<std::int64_t>(edges.size());
    g.adj.assign(n, {});
    int line = line_base;
    for (auto [u, v] : edges) {
        ++line;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line, "vertex id out of range: " + std::to_string(u) + " " +
                                       std::to_string(v));
        if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = g.adj[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw ParseError(line_base, "duplicate edge at vertex " + std::to_string(v));
    }
    return g;
}

// Edge-list text format: optional '#' comment lines, first data line "n m",
// then m lines "u v". Whitespace-separated, newline-delimited ASCII.
inline Graph parse_graph(std::string_view text) {
    int n = -1;
    std::int64_t m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line = text.substr(
            start, end == std::string_view::npos ? text.size() - start : end - start);
        ++line_no;
        start = (end == std::string_view::npos) ? text.size() + 1 : end + 1;

        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size() || line[i] == '#') continue;

        std::istringstream ss{std::string(line)};
        if (n < 0) {
            if (!(ss >> n >> m)) throw ParseError(line_no, "expected header 'n m'");
            std::string rest;
            if (ss >> rest) throw ParseError(line_no, "trailing tokens after header");
            if (n <= 0) throw ParseError(line_no, "vertex count must be positive");
            if (m < 0) throw ParseError(line_no, "negative edge count");
            continue;
        }
        Vertex u, v;
        if (!(ss >> u >> v)) throw ParseError(line_no, "expected edge 'u v'");
        std::string rest;
        if (ss >> rest) throw ParseError(line_no, "trailing tokens after edge");
        if (static_cast<std::int64_t>(edges.size()) == m)
            throw ParseError(line_no, "more edges than declared");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "vertex id out of range");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError(line_no, "missing header 'n m'");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    return make_graph(n, edges);
}

inline std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m << '\n';
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v : g.adj[u])
            if (u < v) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace pairdom
