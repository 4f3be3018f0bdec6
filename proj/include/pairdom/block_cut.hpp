#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pairdom/errors.hpp"
#include "pairdom/graph.hpp"

namespace pairdom {

// Blocks (maximal 2-connected subgraphs, bridges included as 2-vertex
// blocks) and cut vertices. Block ids follow the discovery order of the
// depth-first traversal; member lists are sorted ascending.
//
// Flat copies of the adjacency and the member lists ride along: the
// per-query passes walk them heavily and the nested-vector layout costs a
// pointer chase per touch at large n.
struct BlockCutStructure {
    std::vector<std::vector<Vertex>> blocks;
    std::vector<std::int64_t> block_edge_count;
    std::vector<char> is_cut;
    std::vector<Vertex> cut_vertices;
    std::vector<std::vector<int>> blocks_of;
    std::uint64_t ops = 0;

    std::vector<int> adj_off;
    std::vector<Vertex> adj_data;
    std::vector<int> blk_off;
    std::vector<Vertex> blk_data;

    int block_count() const { return static_cast<int>(blocks.size()); }

    std::span<const Vertex> adjacency(Vertex v) const {
        return {adj_data.data() + adj_off[v],
                static_cast<std::size_t>(adj_off[v + 1] - adj_off[v])};
    }
    std::span<const Vertex> members(int b) const {
        return {blk_data.data() + blk_off[b],
                static_cast<std::size_t>(blk_off[b + 1] - blk_off[b])};
    }
};

// Single iterative depth-first traversal (Hopcroft-Tarjan). Throws
// DisconnectedError when the graph has more than one component.
inline BlockCutStructure decompose(const Graph& g) {
    const int n = g.n;
    BlockCutStructure bc;
    bc.is_cut.assign(n, 0);
    bc.blocks_of.assign(n, {});
    if (n == 0) return bc;

    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::vector<Vertex> dfs_stack;
    std::vector<char> in_block(n, 0);
    int timer = 0;
    int visited = 0;
    int root_children = 0;

    const Vertex root = 0;
    disc[root] = low[root] = timer++;
    ++visited;
    dfs_stack.push_back(root);

    auto pop_block = [&](Vertex u, Vertex v) {
        std::vector<Vertex> members;
        std::int64_t edges = 0;
        while (true) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            ++edges;
            ++bc.ops;
            for (Vertex x : {a, b}) {
                if (!in_block[x]) {
                    in_block[x] = 1;
                    members.push_back(x);
                }
            }
            if (a == u && b == v) break;
        }
        for (Vertex x : members) in_block[x] = 0;
        std::sort(members.begin(), members.end());
        int id = bc.block_count();
        for (Vertex x : members) bc.blocks_of[x].push_back(id);
        bc.blocks.push_back(std::move(members));
        bc.block_edge_count.push_back(edges);
    };

    while (!dfs_stack.empty()) {
        Vertex v = dfs_stack.back();
        if (next[v] < g.degree(v)) {
            Vertex w = g.adj[v][next[v]++];
            ++bc.ops;
            if (disc[w] == -1) {
                edge_stack.emplace_back(v, w);
                parent[w] = v;
                disc[w] = low[w] = timer++;
                ++visited;
                if (v == root) ++root_children;
                dfs_stack.push_back(w);
            } else if (w != parent[v] && disc[w] < disc[v]) {
                edge_stack.emplace_back(v, w);
                if (disc[w] < low[v]) low[v] = disc[w];
            }
        } else {
            dfs_stack.pop_back();
            if (!dfs_stack.empty()) {
                Vertex u = dfs_stack.back();
                if (low[v] < low[u]) low[u] = low[v];
                if (low[v] >= disc[u]) {
                    pop_block(u, v);
                    if (u != root) bc.is_cut[u] = 1;
                }
            }
        }
    }
    if (visited != n) throw DisconnectedError();
    check_invariant(edge_stack.empty(), "dangling edges after block decomposition");
    bc.is_cut[root] = (root_children >= 2);

    for (Vertex v = 0; v < n; ++v)
        if (bc.is_cut[v]) bc.cut_vertices.push_back(v);

    bc.adj_off.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) bc.adj_off[v + 1] = bc.adj_off[v] + g.degree(v);
    bc.adj_data.resize(bc.adj_off[n]);
    for (Vertex v = 0; v < n; ++v)
        std::copy(g.adj[v].begin(), g.adj[v].end(), bc.adj_data.begin() + bc.adj_off[v]);
    const int nb = bc.block_count();
    bc.blk_off.assign(nb + 1, 0);
    for (int b = 0; b < nb; ++b)
        bc.blk_off[b + 1] = bc.blk_off[b] + static_cast<int>(bc.blocks[b].size());
    bc.blk_data.resize(bc.blk_off[nb]);
    for (int b = 0; b < nb; ++b)
        std::copy(bc.blocks[b].begin(), bc.blocks[b].end(), bc.blk_data.begin() + bc.blk_off[b]);
    return bc;
}

struct ValidityReport {
    bool ok = true;
    int offending_block = -1;
    std::string reason;
};

// A valid block graph: connected (guaranteed by decompose), no isolated
// vertex, every block a clique. Cliqueness is checked through per-block edge
// counts: edges partition over blocks, so block b is complete iff it holds
// exactly |V(b)|*(|V(b)|-1)/2 of them.
inline ValidityReport validate_block_graph(const Graph& g, const BlockCutStructure& bc) {
    for (Vertex v = 0; v < g.n; ++v) {
        if (g.adj[v].empty())
            return {false, -1, "isolated vertex " + std::to_string(v)};
    }
    for (int b = 0; b < bc.block_count(); ++b) {
        auto k = static_cast<std::int64_t>(bc.blocks[b].size());
        if (bc.block_edge_count[b] != k * (k - 1) / 2)
            return {false, b,
                    "block " + std::to_string(b) + " (" + std::to_string(k) +
                        " vertices, " + std::to_string(bc.block_edge_count[b]) +
                        " edges) is not a clique"};
    }
    return {};
}

inline void require_block_graph(const Graph& g, const BlockCutStructure& bc) {
    ValidityReport rep = validate_block_graph(g, bc);
    if (!rep.ok) throw NotABlockGraph(rep.offending_block, rep.reason);
}

// An end block contains exactly one cut vertex.
inline bool is_end_block(const BlockCutStructure& bc, int b) {
    int cuts = 0;
    for (Vertex v : bc.blocks[b]) cuts += bc.is_cut[v] ? 1 : 0;
    return cuts == 1;
}

}  // namespace pairdom
