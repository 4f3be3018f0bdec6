#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pairdom/errors.hpp"
#include "pairdom/graph.hpp"

namespace pairdom {

// Exponential-time ground truth: exhaustive enumeration of paired-dominating
// sets. Deliberately independent of the block-graph machinery: plain bitmask
// domination plus an exact matching search.

namespace oracle_detail {

// Perfect matching existence on the subgraph induced by `mask`: pair off the
// lowest remaining vertex against each neighbor in turn. Complete search, no
// structural assumptions.
inline bool has_perfect_matching(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
    if (mask == 0) return true;
    int v = __builtin_ctz(mask);
    std::uint32_t partners = adj[v] & mask;
    std::uint32_t rest = mask & ~(1u << v);
    while (partners) {
        int w = __builtin_ctz(partners);
        partners &= partners - 1;
        if (has_perfect_matching(adj, rest & ~(1u << w))) return true;
    }
    return false;
}

// Maximum matching size by the same exhaustive search; used by tests that
// cross-check the clique-component shortcut.
inline int max_matching_size(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
    if (mask == 0) return 0;
    int v = __builtin_ctz(mask);
    std::uint32_t rest = mask & ~(1u << v);
    int best = max_matching_size(adj, rest);  // leave v unmatched
    std::uint32_t partners = adj[v] & mask;
    while (partners) {
        int w = __builtin_ctz(partners);
        partners &= partners - 1;
        int s = 1 + max_matching_size(adj, rest & ~(1u << w));
        if (s > best) best = s;
    }
    return best;
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.n, 0);
    for (Vertex v = 0; v < g.n; ++v)
        for (Vertex w : g.adj[v]) adj[v] |= 1u << w;
    return adj;
}

}  // namespace oracle_detail

struct OracleResult {
    int gamma_pr = 0;
    std::int64_t num_min_sets = 0;
    std::vector<Vertex> core;                // vertices in every minimum PDS
    std::vector<std::uint32_t> min_sets;     // all minimum sets, as bitmasks
};

// S is a paired-dominating set iff every vertex outside S has a neighbor in
// S and G[S] has a perfect matching.
inline bool is_pds(const Graph& g, const std::vector<Vertex>& s) {
    if (g.n > 31) throw TooLarge(g.n, 31);
    std::vector<std::uint32_t> adj = oracle_detail::adjacency_masks(g);
    std::uint32_t smask = 0;
    for (Vertex v : s) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
        smask |= 1u << v;
    }
    for (Vertex v = 0; v < g.n; ++v)
        if (!(smask >> v & 1) && (adj[v] & smask) == 0) return false;
    return oracle_detail::has_perfect_matching(adj, smask);
}

// Enumerates vertex subsets by increasing even cardinality and stops at the
// first feasible size. Domination is the cheap bitmask filter; the matching
// test only runs on dominating sets.
inline OracleResult solve(const Graph& g, int cap = 20) {
    if (g.n > cap || g.n > 31) throw TooLarge(g.n, cap);
    if (g.n < 2) throw std::invalid_argument("oracle needs at least two vertices");
    for (Vertex v = 0; v < g.n; ++v)
        if (g.adj[v].empty()) throw std::invalid_argument("isolated vertex");

    const int n = g.n;
    std::vector<std::uint32_t> adj = oracle_detail::adjacency_masks(g);
    {
        std::uint32_t seen = 1u, frontier = 1u;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t t = frontier; t; t &= t - 1) next |= adj[__builtin_ctz(t)];
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen != ((n == 31) ? 0x7fffffffu : ((1u << n) - 1)))
            throw std::invalid_argument("graph is not connected");
    }
    std::vector<std::uint32_t> closed(n);
    for (Vertex v = 0; v < n; ++v) closed[v] = adj[v] | (1u << v);
    const std::uint32_t full = (n == 31) ? 0x7fffffffu : ((1u << n) - 1);

    OracleResult res;
    for (int k = 2; k <= n; k += 2) {
        std::uint32_t mask = (1u << k) - 1;
        while (mask <= full) {
            std::uint32_t cover = 0;
            for (std::uint32_t t = mask; t; t &= t - 1) cover |= closed[__builtin_ctz(t)];
            if (cover == full && oracle_detail::has_perfect_matching(adj, mask)) {
                res.min_sets.push_back(mask);
            }
            // Gosper's hack: next subset of the same popcount.
            std::uint32_t c = mask & -mask;
            std::uint32_t r = mask + c;
            if (r > full || r < mask) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        if (!res.min_sets.empty()) {
            res.gamma_pr = k;
            break;
        }
    }
    check_invariant(!res.min_sets.empty(), "no paired-dominating set found");

    res.num_min_sets = static_cast<std::int64_t>(res.min_sets.size());
    std::uint32_t inter = full;
    for (std::uint32_t s : res.min_sets) inter &= s;
    for (Vertex v = 0; v < n; ++v)
        if (inter >> v & 1) res.core.push_back(v);
    return res;
}

inline bool core_membership(const Graph& g, Vertex v, int cap = 20) {
    OracleResult res = solve(g, cap);
    return std::find(res.core.begin(), res.core.end(), v) != res.core.end();
}

}  // namespace pairdom
